//! Seeded property fuzzing for the shifting and closure lemmas.
//!
//! Each trial draws a random graph (order uniform in `2..=n_max`, edge
//! probability uniform in `[0,1)`), applies the lemma's hypothesis filter
//! and checks its conclusion. A violation is data, not an error: reports
//! carry every counterexample found, and [`replay_violation`] re-verifies a
//! counterexample from its serialized form.

use super::SearchError;
use crate::freeness::{is_clique_free, linear_forest_number, matching_number, count_cliques};
use crate::graph::{Coloring, Graph};
use crate::graph6;
use crate::transforms::{greedy_coloring, shift, strong_shift};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Largest host order the fuzzer accepts.
pub const FUZZ_MAX_N: usize = 12;

/// The fuzzable statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaId {
    /// Shifting preserves linear-forest-freeness ("2.1").
    ShiftLinearForest,
    /// Strong shifting preserves joint clique/linear-forest freeness under a
    /// greedy proper coloring ("2.2"). Findings are published either way.
    StrongShiftFree,
    /// Adding an edge with degree sum at least `s` preserves
    /// linear-forest-freeness in both directions ("2.4").
    ClosureEquivalence,
    /// The color-restricted version of the same equivalence ("2.5").
    /// Findings are published either way.
    StrongClosureEquivalence,
    /// Shifting preserves the edge count.
    ShiftEdgeCount,
    /// Shifting never increases the matching number.
    ShiftMatching,
    /// Shifting never decreases any clique count (checked for r <= 5).
    ShiftCliques,
}

impl LemmaId {
    pub const ALL: [LemmaId; 7] = [
        LemmaId::ShiftLinearForest,
        LemmaId::StrongShiftFree,
        LemmaId::ClosureEquivalence,
        LemmaId::StrongClosureEquivalence,
        LemmaId::ShiftEdgeCount,
        LemmaId::ShiftMatching,
        LemmaId::ShiftCliques,
    ];

    /// True for the statements that are proved; a violation there is an
    /// implementation bug, not a finding.
    pub fn is_proved(&self) -> bool {
        !matches!(self, LemmaId::StrongShiftFree | LemmaId::StrongClosureEquivalence)
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LemmaId::ShiftLinearForest => "2.1",
            LemmaId::StrongShiftFree => "2.2",
            LemmaId::ClosureEquivalence => "2.4",
            LemmaId::StrongClosureEquivalence => "2.5",
            LemmaId::ShiftEdgeCount => "shift-edges",
            LemmaId::ShiftMatching => "shift-matching",
            LemmaId::ShiftCliques => "shift-cliques",
        };
        f.write_str(name)
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim_start_matches("lemma") {
            "2.1" => Ok(LemmaId::ShiftLinearForest),
            "2.2" => Ok(LemmaId::StrongShiftFree),
            "2.4" => Ok(LemmaId::ClosureEquivalence),
            "2.5" => Ok(LemmaId::StrongClosureEquivalence),
            "shift-edges" => Ok(LemmaId::ShiftEdgeCount),
            "shift-matching" => Ok(LemmaId::ShiftMatching),
            "shift-cliques" => Ok(LemmaId::ShiftCliques),
            other => Err(format!(
                "unknown lemma id {other:?}; expected 2.1, 2.2, 2.4, 2.5, shift-edges, shift-matching or shift-cliques"
            )),
        }
    }
}

/// A counterexample: the graph it occurred on plus the parameters that
/// witnessed it, keyed so [`replay_violation`] can reconstruct the check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzViolation {
    pub graph6: String,
    pub params: BTreeMap<String, u64>,
}

impl FuzzViolation {
    fn new(g: &Graph, entries: &[(&str, u64)]) -> Self {
        FuzzViolation {
            graph6: graph6::encode(g),
            params: entries.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

/// Outcome of a fuzz run. Deterministic given `(lemma, trials, n_max, seed)`.
#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub lemma: String,
    pub trials: u64,
    pub n_max: usize,
    pub seed: u64,
    /// Trials on which the hypothesis applied.
    pub checked: u64,
    pub violations: Vec<FuzzViolation>,
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial.wrapping_add(1));
    rng
}

fn random_graph(rng: &mut ChaCha8Rng, n_max: usize) -> Graph {
    let n = rng.random_range(2..=n_max);
    let p: f64 = rng.random();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let i = rng.random_range(0..n - 1);
    let j = rng.random_range(i + 1..n);
    (i, j)
}

struct TrialOutcome {
    checked: bool,
    violations: Vec<FuzzViolation>,
}

fn run_trial(lemma: LemmaId, trial: u64, n_max: usize, seed: u64) -> TrialOutcome {
    let mut rng = trial_rng(seed, trial);
    let g = random_graph(&mut rng, n_max);
    let n = g.n();
    let mut violations = Vec::new();
    let mut checked = true;
    match lemma {
        LemmaId::ShiftLinearForest => {
            let (i, j) = random_pair(&mut rng, n);
            let lf_before = linear_forest_number(&g);
            let lf_after = linear_forest_number(&shift(&g, i, j));
            if lf_after > lf_before {
                violations.push(FuzzViolation::new(
                    &g,
                    &[("trial", trial), ("i", i as u64), ("j", j as u64), ("s", lf_before as u64 + 1)],
                ));
            }
        }
        LemmaId::ShiftEdgeCount => {
            let (i, j) = random_pair(&mut rng, n);
            let h = shift(&g, i, j);
            if h.edge_count() != g.edge_count() {
                violations.push(FuzzViolation::new(
                    &g,
                    &[("trial", trial), ("i", i as u64), ("j", j as u64)],
                ));
            }
        }
        LemmaId::ShiftMatching => {
            let (i, j) = random_pair(&mut rng, n);
            let h = shift(&g, i, j);
            if matching_number(&h) > matching_number(&g) {
                violations.push(FuzzViolation::new(
                    &g,
                    &[("trial", trial), ("i", i as u64), ("j", j as u64)],
                ));
            }
        }
        LemmaId::ShiftCliques => {
            let (i, j) = random_pair(&mut rng, n);
            let h = shift(&g, i, j);
            for r in 2..=5usize {
                if count_cliques(&h, r) < count_cliques(&g, r) {
                    violations.push(FuzzViolation::new(
                        &g,
                        &[("trial", trial), ("i", i as u64), ("j", j as u64), ("r", r as u64)],
                    ));
                }
            }
        }
        LemmaId::StrongShiftFree => {
            let (i, j) = random_pair(&mut rng, n);
            let c = greedy_coloring(&g);
            let h = strong_shift(&g, i, j, &c);
            let lf_before = linear_forest_number(&g);
            if linear_forest_number(&h) > lf_before {
                violations.push(FuzzViolation::new(
                    &g,
                    &[("trial", trial), ("i", i as u64), ("j", j as u64), ("s", lf_before as u64 + 1)],
                ));
            }
            for r in 2..=5usize {
                if is_clique_free(&g, r + 1) && !is_clique_free(&h, r + 1) {
                    violations.push(FuzzViolation::new(
                        &g,
                        &[("trial", trial), ("i", i as u64), ("j", j as u64), ("r", r as u64)],
                    ));
                }
            }
        }
        LemmaId::ClosureEquivalence => match random_non_edge(&mut rng, &g, None) {
            None => checked = false,
            Some((u, v)) => {
                let degree_sum = g.degree(u) + g.degree(v);
                let mut h = g.clone();
                h.add_edge(u, v);
                let lf_before = linear_forest_number(&g);
                let lf_after = linear_forest_number(&h);
                debug_assert!(lf_after >= lf_before);
                // the equivalence fails iff some s <= d(u)+d(v) separates
                // lf(G) from lf(G+uv); the smallest candidate is lf(G)+1
                if lf_after > lf_before && lf_before + 1 <= degree_sum {
                    violations.push(FuzzViolation::new(
                        &g,
                        &[("trial", trial), ("u", u as u64), ("v", v as u64), ("s", lf_before as u64 + 1)],
                    ));
                }
            }
        },
        LemmaId::StrongClosureEquivalence => {
            let c = greedy_coloring(&g);
            match random_non_edge(&mut rng, &g, Some(&c)) {
                None => checked = false,
                Some((u, v)) => {
                    let degree_sum = g.degree(u) + g.degree(v);
                    let mut h = g.clone();
                    h.add_edge(u, v);
                    let lf_before = linear_forest_number(&g);
                    let lf_after = linear_forest_number(&h);
                    let s = lf_before + 1;
                    if lf_after >= s && s <= degree_sum {
                        // some clique-free r always exists (r = n at worst)
                        let r = (2..=n).find(|&r| is_clique_free(&g, r + 1)).unwrap_or(n);
                        violations.push(FuzzViolation::new(
                            &g,
                            &[
                                ("trial", trial),
                                ("u", u as u64),
                                ("v", v as u64),
                                ("s", s as u64),
                                ("r", r as u64),
                            ],
                        ));
                    }
                    if lf_before + 1 <= degree_sum {
                        for r in 2..=5.min(n) {
                            if is_clique_free(&g, r + 1) && !is_clique_free(&h, r + 1) {
                                violations.push(FuzzViolation::new(
                                    &g,
                                    &[
                                        ("trial", trial),
                                        ("u", u as u64),
                                        ("v", v as u64),
                                        ("s", lf_before as u64 + 1),
                                        ("r", r as u64),
                                    ],
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    TrialOutcome { checked, violations }
}

fn random_non_edge(
    rng: &mut ChaCha8Rng,
    g: &Graph,
    colors: Option<&Coloring>,
) -> Option<(usize, usize)> {
    let mut candidates = Vec::new();
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if !g.has_edge(u, v) && colors.is_none_or(|c| c.color(u) != c.color(v)) {
                candidates.push((u, v));
            }
        }
    }
    if candidates.is_empty() {
        None
    } else {
        Some(candidates[rng.random_range(0..candidates.len())])
    }
}

/// Runs `trials` independent seeded trials of `lemma`. Identical inputs give
/// identical reports regardless of the thread budget.
pub fn lemma_fuzz(lemma: LemmaId, trials: u64, n_max: usize, seed: u64) -> Result<FuzzReport, SearchError> {
    if !(2..=FUZZ_MAX_N).contains(&n_max) {
        return Err(SearchError::FuzzOrderOutOfRange(n_max));
    }
    let outcomes: Vec<TrialOutcome> = (0..trials)
        .into_par_iter()
        .map(|trial| run_trial(lemma, trial, n_max, seed))
        .collect();
    let checked = outcomes.iter().filter(|o| o.checked).count() as u64;
    let violations: Vec<FuzzViolation> =
        outcomes.into_iter().flat_map(|o| o.violations).collect();
    Ok(FuzzReport {
        lemma: lemma.to_string(),
        trials,
        n_max,
        seed,
        checked,
        violations,
    })
}

/// Re-verifies a reported counterexample from its serialized form: decodes
/// the graph, reapplies the hypothesis filter and checks that the conclusion
/// still fails. Returns false for a violation that does not reproduce.
pub fn replay_violation(lemma: LemmaId, violation: &FuzzViolation) -> Result<bool, SearchError> {
    let g = graph6::decode(&violation.graph6).map_err(|e| SearchError::InvalidRanges(e.to_string()))?;
    let p = |key: &str| violation.params.get(key).copied();
    let genuine = match lemma {
        LemmaId::ShiftLinearForest => {
            let (Some(i), Some(j), Some(s)) = (p("i"), p("j"), p("s")) else { return Ok(false) };
            let (i, j, s) = (i as usize, j as usize, s as usize);
            linear_forest_number(&g) < s && linear_forest_number(&shift(&g, i, j)) >= s
        }
        LemmaId::ShiftEdgeCount => {
            let (Some(i), Some(j)) = (p("i"), p("j")) else { return Ok(false) };
            shift(&g, i as usize, j as usize).edge_count() != g.edge_count()
        }
        LemmaId::ShiftMatching => {
            let (Some(i), Some(j)) = (p("i"), p("j")) else { return Ok(false) };
            matching_number(&shift(&g, i as usize, j as usize)) > matching_number(&g)
        }
        LemmaId::ShiftCliques => {
            let (Some(i), Some(j), Some(r)) = (p("i"), p("j"), p("r")) else { return Ok(false) };
            let h = shift(&g, i as usize, j as usize);
            count_cliques(&h, r as usize) < count_cliques(&g, r as usize)
        }
        LemmaId::StrongShiftFree => {
            let (Some(i), Some(j)) = (p("i"), p("j")) else { return Ok(false) };
            let c = greedy_coloring(&g);
            let h = strong_shift(&g, i as usize, j as usize, &c);
            if let Some(r) = p("r") {
                let r = r as usize;
                is_clique_free(&g, r + 1) && !is_clique_free(&h, r + 1)
            } else if let Some(s) = p("s") {
                let s = s as usize;
                linear_forest_number(&g) < s && linear_forest_number(&h) >= s
            } else {
                false
            }
        }
        LemmaId::ClosureEquivalence => {
            let (Some(u), Some(v), Some(s)) = (p("u"), p("v"), p("s")) else { return Ok(false) };
            let (u, v, s) = (u as usize, v as usize, s as usize);
            if g.has_edge(u, v) || g.degree(u) + g.degree(v) < s {
                return Ok(false);
            }
            let mut h = g.clone();
            h.add_edge(u, v);
            linear_forest_number(&g) < s && linear_forest_number(&h) >= s
        }
        LemmaId::StrongClosureEquivalence => {
            let (Some(u), Some(v), Some(s), Some(r)) = (p("u"), p("v"), p("s"), p("r")) else {
                return Ok(false);
            };
            let (u, v, s, r) = (u as usize, v as usize, s as usize, r as usize);
            let c = greedy_coloring(&g);
            if g.has_edge(u, v) || c.color(u) == c.color(v) || g.degree(u) + g.degree(v) < s {
                return Ok(false);
            }
            let mut h = g.clone();
            h.add_edge(u, v);
            let hypothesis = is_clique_free(&g, r + 1) && linear_forest_number(&g) < s;
            let conclusion = is_clique_free(&h, r + 1) && linear_forest_number(&h) < s;
            hypothesis && !conclusion
        }
    };
    Ok(genuine)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_id_round_trip() {
        for id in LemmaId::ALL {
            assert_eq!(id.to_string().parse::<LemmaId>().unwrap(), id);
        }
        assert!("2.3".parse::<LemmaId>().is_err());
    }

    #[test]
    fn proved_lemmas_have_no_violations_in_short_runs() {
        for id in [LemmaId::ShiftLinearForest, LemmaId::ShiftEdgeCount, LemmaId::ShiftMatching] {
            let report = lemma_fuzz(id, 300, 8, 7).unwrap();
            assert_eq!(report.trials, 300);
            assert!(report.violations.is_empty(), "{id}: {:?}", report.violations.first());
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let a = lemma_fuzz(LemmaId::StrongShiftFree, 200, 9, 42).unwrap();
        let b = lemma_fuzz(LemmaId::StrongShiftFree, 200, 9, 42).unwrap();
        assert_eq!(a.checked, b.checked);
        assert_eq!(a.violations, b.violations);
    }

    #[test]
    fn n_max_is_capped() {
        assert!(matches!(lemma_fuzz(LemmaId::ShiftEdgeCount, 1, 13, 0), Err(SearchError::FuzzOrderOutOfRange(13))));
        assert!(matches!(lemma_fuzz(LemmaId::ShiftEdgeCount, 1, 1, 0), Err(SearchError::FuzzOrderOutOfRange(1))));
    }

    #[test]
    fn findings_replay_as_genuine() {
        for id in [LemmaId::StrongShiftFree, LemmaId::StrongClosureEquivalence] {
            let report = lemma_fuzz(id, 2000, 9, 11).unwrap();
            for violation in &report.violations {
                assert!(replay_violation(id, violation).unwrap(), "{id}: {violation:?}");
            }
        }
    }
}
