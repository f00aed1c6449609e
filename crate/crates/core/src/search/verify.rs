//! Formula-versus-exhaustive verification reports for the five built-in
//! extremal theorems.

use super::extremal::{extremal_search, ConstraintSpec, Objective};
use super::SearchError;
use crate::formulas::{self, FormulaParams};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// The five verifiable formulas, keyed the way the CLI spells them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    /// Edge maximum avoiding `K_{r+1}` and `M_{s+1}`.
    Thm1_1,
    /// `K_r`-count maximum avoiding `M_{s+1}`.
    Thm1_2,
    /// `K_r`-count maximum avoiding s-edge linear forests.
    Thm1_3,
    /// `K_r`-count maximum avoiding `K_{k+1}` and `M_{s+1}`.
    Thm1_4,
    /// Edge maximum avoiding `K_{r+1}` and s-edge linear forests.
    Thm1_5,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [
        TheoremId::Thm1_1,
        TheoremId::Thm1_2,
        TheoremId::Thm1_3,
        TheoremId::Thm1_4,
        TheoremId::Thm1_5,
    ];

    /// Smallest host order inside the validity window.
    pub fn window_min_n(&self, s: u64) -> u64 {
        match self {
            TheoremId::Thm1_3 => s + 1,
            _ => 2 * s + 1,
        }
    }

    pub fn needs_k(&self) -> bool {
        matches!(self, TheoremId::Thm1_4)
    }

    fn objective(&self, r: u64) -> Objective {
        match self {
            TheoremId::Thm1_1 | TheoremId::Thm1_5 => Objective::Edges,
            _ => Objective::Cliques(r as usize),
        }
    }

    fn constraints(&self, r: u64, s: u64, k: Option<u64>) -> ConstraintSpec {
        let s = s as usize;
        match self {
            TheoremId::Thm1_1 => ConstraintSpec {
                clique_bound: Some(r as usize + 1),
                matching_bound: Some(s),
                linforest_bound: None,
            },
            TheoremId::Thm1_2 => ConstraintSpec {
                matching_bound: Some(s),
                ..Default::default()
            },
            TheoremId::Thm1_3 => ConstraintSpec {
                linforest_bound: Some(s),
                ..Default::default()
            },
            TheoremId::Thm1_4 => ConstraintSpec {
                clique_bound: Some(k.expect("thm1.4 needs k") as usize + 1),
                matching_bound: Some(s),
                linforest_bound: None,
            },
            TheoremId::Thm1_5 => ConstraintSpec {
                clique_bound: Some(r as usize + 1),
                linforest_bound: Some(s),
                matching_bound: None,
            },
        }
    }

    fn formula(&self, p: FormulaParams, unchecked: bool) -> Result<u64, formulas::FormulaError> {
        let FormulaParams { n, r, s, k } = p;
        match (self, unchecked) {
            (TheoremId::Thm1_1, false) => formulas::ex_clique_matching(n, r, s),
            (TheoremId::Thm1_1, true) => formulas::ex_clique_matching_unchecked(n, r, s),
            (TheoremId::Thm1_2, false) => formulas::gex_matching(n, r, s),
            (TheoremId::Thm1_2, true) => formulas::gex_matching_unchecked(n, r, s),
            (TheoremId::Thm1_3, false) => formulas::gex_linear_forest(n, r, s),
            (TheoremId::Thm1_3, true) => formulas::gex_linear_forest_unchecked(n, r, s),
            (TheoremId::Thm1_4, false) => formulas::gex_clique_matching(n, k.expect("thm1.4 needs k"), r, s),
            (TheoremId::Thm1_4, true) => {
                formulas::gex_clique_matching_unchecked(n, k.expect("thm1.4 needs k"), r, s)
            }
            (TheoremId::Thm1_5, false) => formulas::ex_clique_linear_forest(n, r, s),
            (TheoremId::Thm1_5, true) => formulas::ex_clique_linear_forest_unchecked(n, r, s),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TheoremId::Thm1_1 => "thm1.1",
            TheoremId::Thm1_2 => "thm1.2",
            TheoremId::Thm1_3 => "thm1.3",
            TheoremId::Thm1_4 => "thm1.4",
            TheoremId::Thm1_5 => "thm1.5",
        };
        f.write_str(name)
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim_start_matches("thm") {
            "1.1" => Ok(TheoremId::Thm1_1),
            "1.2" => Ok(TheoremId::Thm1_2),
            "1.3" => Ok(TheoremId::Thm1_3),
            "1.4" => Ok(TheoremId::Thm1_4),
            "1.5" => Ok(TheoremId::Thm1_5),
            other => Err(format!("unknown theorem id {other:?}; expected thm1.1..thm1.5")),
        }
    }
}

/// Parameter grid for [`verify_theorem`]. Ranges are inclusive. `n = None`
/// expands to the theorem's window intersected with the exhaustive cap.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub s: (u64, u64),
    pub r: (u64, u64),
    pub k: Option<(u64, u64)>,
    pub n: Option<(u64, u64)>,
    /// Exhaustive search cap on the host order.
    pub cap: u64,
    /// Additionally probe hosts below the validity window (`n` in
    /// `[s+1, 2s]`); those rows are informational and never gate.
    pub probe_low_n: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { s: (1, 1), r: (2, 2), k: None, n: None, cap: 9, probe_low_n: false }
    }
}

/// One verified parameter point.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyRow {
    pub params: FormulaParams,
    pub formula: u64,
    pub exhaustive: u64,
    pub agree: bool,
    /// True for below-window probe rows, which never affect the verdict.
    pub probe: bool,
    pub witnesses: Vec<String>,
}

/// Outcome of a verification sweep: one row per parameter point, overall
/// pass iff every in-window row agrees.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub rows: Vec<VerifyRow>,
    pub pass: bool,
}

/// Compares the closed-form value with the exhaustive search value on every
/// grid point, within the theorem's validity window (plus optional
/// below-window probe rows).
pub fn verify_theorem(id: TheoremId, opts: &VerifyOptions) -> Result<VerifyReport, SearchError> {
    let range = |(lo, hi): (u64, u64)| lo..=hi;
    if opts.s.0 > opts.s.1 || opts.r.0 > opts.r.1 {
        return Err(SearchError::InvalidRanges("empty s or r range".into()));
    }
    if id.needs_k() && opts.k.is_none() {
        return Err(SearchError::InvalidRanges(format!("{id} requires a k range")));
    }
    if !id.needs_k() && opts.k.is_some() {
        return Err(SearchError::InvalidRanges(format!("{id} does not take k")));
    }
    let ks: Vec<Option<u64>> = match opts.k {
        Some(kr) => range(kr).map(Some).collect(),
        None => vec![None],
    };
    let mut rows = Vec::new();
    for s in range(opts.s) {
        for r in range(opts.r) {
            for &k in &ks {
                let win_lo = id.window_min_n(s);
                if opts.probe_low_n {
                    for n in (s + 1)..win_lo.min(opts.cap + 1) {
                        rows.push(make_row(id, FormulaParams { n, r, s, k }, true)?);
                    }
                }
                let (n_lo, n_hi) = opts.n.unwrap_or((win_lo, opts.cap));
                if n_lo < win_lo {
                    return Err(SearchError::InvalidRanges(format!(
                        "n = {n_lo} below the validity window of {id} at s = {s} (need n >= {win_lo})"
                    )));
                }
                if n_hi > opts.cap {
                    return Err(SearchError::InvalidRanges(format!(
                        "n = {n_hi} above the exhaustive cap {}",
                        opts.cap
                    )));
                }
                for n in n_lo..=n_hi {
                    rows.push(make_row(id, FormulaParams { n, r, s, k }, false)?);
                }
            }
        }
    }
    let pass = rows.iter().all(|row| row.probe || row.agree);
    Ok(VerifyReport { theorem: id.to_string(), rows, pass })
}

fn make_row(id: TheoremId, params: FormulaParams, probe: bool) -> Result<VerifyRow, SearchError> {
    let formula = id.formula(params, probe)?;
    let record = extremal_search(
        params.n as usize,
        id.objective(params.r),
        id.constraints(params.r, params.s, params.k),
    )?;
    Ok(VerifyRow {
        params,
        formula,
        exhaustive: record.value,
        agree: formula == record.value,
        probe,
        witnesses: record.witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_id_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.to_string().parse::<TheoremId>().unwrap(), id);
        }
        assert!("thm2.1".parse::<TheoremId>().is_err());
    }

    #[test]
    fn small_verification_sweep_passes() {
        let opts = VerifyOptions { s: (1, 1), r: (2, 2), cap: 5, ..Default::default() };
        let report = verify_theorem(TheoremId::Thm1_5, &opts).unwrap();
        assert!(report.pass);
        assert_eq!(report.rows.len(), 3); // n = 3, 4, 5
        assert!(report.rows.iter().all(|r| !r.witnesses.is_empty()));
    }

    #[test]
    fn probe_rows_never_gate() {
        let opts = VerifyOptions { s: (3, 3), r: (2, 2), cap: 7, probe_low_n: true, ..Default::default() };
        let report = verify_theorem(TheoremId::Thm1_5, &opts).unwrap();
        let probes: Vec<_> = report.rows.iter().filter(|r| r.probe).collect();
        assert_eq!(probes.len(), 3); // n = 4, 5, 6
        assert!(report.pass, "disagreement on probe rows must not fail the report");
    }

    #[test]
    fn k_range_is_validated() {
        let opts = VerifyOptions { s: (1, 1), r: (3, 3), cap: 5, ..Default::default() };
        assert!(matches!(verify_theorem(TheoremId::Thm1_4, &opts), Err(SearchError::InvalidRanges(_))));
        let opts = VerifyOptions { s: (1, 1), r: (2, 2), k: Some((3, 3)), cap: 5, ..Default::default() };
        assert!(matches!(verify_theorem(TheoremId::Thm1_1, &opts), Err(SearchError::InvalidRanges(_))));
    }

    #[test]
    fn out_of_window_explicit_n_is_rejected() {
        let opts =
            VerifyOptions { s: (2, 2), r: (2, 2), n: Some((3, 5)), cap: 9, ..Default::default() };
        assert!(matches!(verify_theorem(TheoremId::Thm1_5, &opts), Err(SearchError::InvalidRanges(_))));
    }
}
