//! Exact extremal search: maximize an objective over all isomorphism classes
//! of n-vertex graphs satisfying a conjunction of forbidden-structure bounds.

use super::enumerate::levels_filtered;
use super::small::SmallGraph;
use super::SearchError;
use crate::freeness::{count_cliques, has_matching_of_size, is_clique_free, is_linear_forest_free};
use crate::graph::Graph;
use crate::graph6;
use rayon::prelude::*;
use serde::Serialize;

/// What the search maximizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    /// Number of edges.
    Edges,
    /// Number of `K_r` subgraphs.
    Cliques(usize),
}

impl Objective {
    pub fn evaluate(&self, g: &Graph) -> u64 {
        match *self {
            Objective::Edges => g.edge_count() as u64,
            Objective::Cliques(r) => count_cliques(g, r),
        }
    }
}

impl std::fmt::Display for Objective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Objective::Edges => write!(f, "edges"),
            Objective::Cliques(r) => write!(f, "cliques({r})"),
        }
    }
}

impl Serialize for Objective {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl std::str::FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "edges" {
            return Ok(Objective::Edges);
        }
        let inner = s
            .strip_prefix("cliques(")
            .and_then(|rest| rest.strip_suffix(')'))
            .or_else(|| s.strip_prefix("cliques:"));
        if let Some(inner) = inner {
            let r: usize = inner.parse().map_err(|_| format!("bad clique order in objective {s:?}"))?;
            if r == 0 {
                return Err("clique order must be at least 1".into());
            }
            return Ok(Objective::Cliques(r));
        }
        Err(format!("unknown objective {s:?}; expected \"edges\" or \"cliques(R)\""))
    }
}

/// A conjunction of forbidden-structure bounds. At least one bound must be
/// present; all parameters are at least 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConstraintSpec {
    /// Forbid the clique `K_q`.
    pub clique_bound: Option<usize>,
    /// Forbid matchings with `s + 1` edges, i.e. require ν(G) <= s.
    pub matching_bound: Option<usize>,
    /// Forbid linear-forest subgraphs with `s` edges, i.e. require lf(G) < s.
    pub linforest_bound: Option<usize>,
}

impl ConstraintSpec {
    pub fn validate(&self) -> Result<(), SearchError> {
        if self.clique_bound.is_none() && self.matching_bound.is_none() && self.linforest_bound.is_none() {
            return Err(SearchError::EmptyConstraint);
        }
        if self.clique_bound == Some(0) || self.matching_bound == Some(0) || self.linforest_bound == Some(0) {
            return Err(SearchError::InvalidConstraint);
        }
        Ok(())
    }

    /// Checks the bounds cheapest first; the linear-forest test dominates the
    /// cost, so cliques and matchings prune most branches before it runs.
    pub fn satisfied_by(&self, g: &Graph) -> bool {
        if let Some(q) = self.clique_bound {
            if !is_clique_free(g, q) {
                return false;
            }
        }
        if let Some(s) = self.matching_bound {
            if has_matching_of_size(g, s + 1) {
                return false;
            }
        }
        if let Some(s) = self.linforest_bound {
            if !is_linear_forest_free(g, s) {
                return false;
            }
        }
        true
    }
}

/// How an extremal value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Exhaustive,
    Construction,
}

/// An extremal value together with every witness attaining it (as canonical
/// graph6 strings) and the provenance of the number.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub objective: Objective,
    pub constraints: ConstraintSpec,
    pub value: u64,
    pub witnesses: Vec<String>,
    pub method: Method,
}

/// Exact maximum of `objective` over all isomorphism classes of n-vertex
/// graphs satisfying `constraints`, with all extremal witnesses.
pub fn extremal_search(
    n: usize,
    objective: Objective,
    constraints: ConstraintSpec,
) -> Result<ExtremalRecord, SearchError> {
    constraints.validate()?;
    if let Objective::Cliques(r) = objective {
        if r == 0 {
            return Err(SearchError::InvalidConstraint);
        }
    }
    let keep = |sg: &SmallGraph| constraints.satisfied_by(&sg.to_graph());
    let keys = levels_filtered(n, &keep)?.pop().unwrap();
    if keys.is_empty() {
        return Err(SearchError::Infeasible);
    }
    let scored: Vec<(u64, u64)> = keys
        .par_iter()
        .map(|&key| (key, objective.evaluate(&SmallGraph::from_key(n, key).to_graph())))
        .collect();
    let value = scored.iter().map(|&(_, v)| v).max().unwrap();
    let witnesses: Vec<String> = scored
        .iter()
        .filter(|&&(_, v)| v == value)
        .map(|&(key, _)| graph6::encode(&SmallGraph::from_key(n, key).to_graph()))
        .collect();
    Ok(ExtremalRecord {
        n,
        objective,
        constraints,
        value,
        witnesses,
        method: Method::Exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_search_values() {
        // triangle-free, no 2-edge linear forest, 5 vertices
        let rec = extremal_search(
            5,
            Objective::Edges,
            ConstraintSpec { clique_bound: Some(3), linforest_bound: Some(2), ..Default::default() },
        )
        .unwrap();
        assert_eq!(rec.value, 1);

        // triangle-free, no 3-edge linear forest, 7 vertices: the star K_{1,6}
        let rec = extremal_search(
            7,
            Objective::Edges,
            ConstraintSpec { clique_bound: Some(3), linforest_bound: Some(3), ..Default::default() },
        )
        .unwrap();
        assert_eq!(rec.value, 6);
        let star = crate::graph::join(&Graph::complete(1), &Graph::empty(6));
        assert_eq!(rec.witnesses, vec![graph6::encode(&super::super::canonical_form(&star).unwrap())]);

        // K_4-free, ν <= 2, maximize triangles on 9 vertices: K_2 ∨ E_7
        let rec = extremal_search(
            9,
            Objective::Cliques(3),
            ConstraintSpec { clique_bound: Some(4), matching_bound: Some(2), ..Default::default() },
        )
        .unwrap();
        assert_eq!(rec.value, 7);
        let apex = crate::graph::join(&Graph::complete(2), &Graph::empty(7));
        assert_eq!(rec.witnesses, vec![graph6::encode(&super::super::canonical_form(&apex).unwrap())]);
    }

    #[test]
    fn rejects_empty_and_invalid_constraints() {
        assert!(matches!(
            extremal_search(4, Objective::Edges, ConstraintSpec::default()),
            Err(SearchError::EmptyConstraint)
        ));
        let c = ConstraintSpec { clique_bound: Some(0), ..Default::default() };
        assert!(matches!(extremal_search(4, Objective::Edges, c), Err(SearchError::InvalidConstraint)));
    }

    #[test]
    fn infeasible_when_vertices_are_forbidden() {
        let c = ConstraintSpec { clique_bound: Some(1), ..Default::default() };
        assert!(matches!(extremal_search(3, Objective::Edges, c), Err(SearchError::Infeasible)));
    }

    #[test]
    fn objective_parsing() {
        assert_eq!("edges".parse::<Objective>().unwrap(), Objective::Edges);
        assert_eq!("cliques(3)".parse::<Objective>().unwrap(), Objective::Cliques(3));
        assert_eq!("cliques:4".parse::<Objective>().unwrap(), Objective::Cliques(4));
        assert!("triangles".parse::<Objective>().is_err());
    }
}
