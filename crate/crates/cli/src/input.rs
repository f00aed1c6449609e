//! Graph input: a `--g6` literal, a file of graph6 lines, or stdin.

use exlf_core::graph::Graph;
use exlf_core::graph6;
use std::io::Read;
use std::path::PathBuf;

use crate::CliError;

/// Reads the input graphs for a subcommand, tagging each with its 1-based
/// line number so malformed lines are reported precisely.
pub fn read_graphs(g6: &Option<String>, file: &Option<PathBuf>) -> Result<Vec<(usize, Graph)>, CliError> {
    if g6.is_some() && file.is_some() {
        return Err(CliError::Usage("pass either --g6 or --file, not both".into()));
    }
    let text = match (g6, file) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let mut graphs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6::decode(line)
            .map_err(|e| CliError::Usage(format!("line {}: {e}", idx + 1)))?;
        graphs.push((idx + 1, g));
    }
    if graphs.is_empty() {
        return Err(CliError::Usage("no input graphs".into()));
    }
    Ok(graphs)
}

/// Inclusive range syntax: `"3"` or `"1..4"`.
pub fn parse_range(text: &str) -> Result<(u64, u64), String> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u64 = lo.parse().map_err(|_| format!("bad range start in {text:?}"))?;
        let hi: u64 = hi.parse().map_err(|_| format!("bad range end in {text:?}"))?;
        if lo > hi {
            return Err(format!("empty range {text:?}"));
        }
        Ok((lo, hi))
    } else {
        let v: u64 = text.parse().map_err(|_| format!("bad number {text:?}"))?;
        Ok((v, v))
    }
}

/// Comma-separated non-negative integers (`"3,2,1"`).
pub fn parse_list(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|part| part.trim().parse::<usize>().map_err(|_| format!("bad list entry {part:?}")))
        .collect()
}
