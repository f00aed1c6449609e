//! Output rendering: every subcommand can emit an aligned text table, a JSON
//! document (stable schema, stable field order) or CSV rows.

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

/// A rectangular result: header plus rows of cells.
pub struct Rows {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Rows {
    pub fn render_table(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut out = String::new();
        let fmt_line = |cells: Vec<String>, widths: &[usize]| -> String {
            let padded: Vec<String> = cells
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{:<width$}", c, width = widths[i]))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        out.push_str(&fmt_line(self.header.iter().map(|s| s.to_string()).collect(), &widths));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&fmt_line(row.clone(), &widths));
            out.push('\n');
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            // graph6 bytes are in 63..=126, so cells never contain commas
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Prints a tabular result in the requested format; `json` must already be
/// the serialized JSON document for the same data.
pub fn emit(format: OutputFormat, rows: &Rows, json: String, out: &mut impl std::io::Write) -> std::io::Result<()> {
    match format {
        OutputFormat::Table => write!(out, "{}", rows.render_table()),
        OutputFormat::Csv => write!(out, "{}", rows.render_csv()),
        OutputFormat::Json => writeln!(out, "{json}"),
    }
}
