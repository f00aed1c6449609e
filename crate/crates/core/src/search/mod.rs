//! Ground-truth engine: isomorphism-reduced enumeration of small graphs,
//! constrained extremal search, theorem verification and lemma fuzzing.

mod enumerate;
mod extremal;
mod fuzz;
mod small;
mod verify;

pub use enumerate::{enumerate_graphs, enumeration_class_counts, CLASS_COUNTS};
pub use extremal::{extremal_search, ConstraintSpec, ExtremalRecord, Method, Objective};
pub use fuzz::{lemma_fuzz, replay_violation, FuzzReport, FuzzViolation, LemmaId, FUZZ_MAX_N};
pub use small::ENUM_MAX;
pub use verify::{verify_theorem, TheoremId, VerifyOptions, VerifyReport, VerifyRow};

use crate::formulas::FormulaError;
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("exhaustive enumeration supports orders 1..={ENUM_MAX}, got {0}")]
    OrderOutOfRange(usize),
    #[error("constraint spec must include at least one bound")]
    EmptyConstraint,
    #[error("constraint bounds and clique orders must be at least 1")]
    InvalidConstraint,
    #[error("no graph satisfies the constraints")]
    Infeasible,
    #[error("fuzzing supports n_max in 2..={FUZZ_MAX_N}, got {0}")]
    FuzzOrderOutOfRange(usize),
    #[error("invalid parameters: {0}")]
    InvalidRanges(String),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// Canonical representative of the isomorphism class of `g` (orders up to
/// [`ENUM_MAX`]). Two graphs are isomorphic iff their canonical forms are
/// equal; witnesses are reported in this form.
pub fn canonical_form(g: &Graph) -> Result<Graph, SearchError> {
    if g.n() > ENUM_MAX {
        return Err(SearchError::OrderOutOfRange(g.n()));
    }
    if g.n() == 0 {
        return Ok(g.clone());
    }
    let sg = small::SmallGraph::from_graph(g);
    let key = small::canonical_key(&sg);
    Ok(small::SmallGraph::from_key(g.n(), key).to_graph())
}
