//! Extremal graph theory for cliques, matchings and linear forests.
//!
//! The crate provides four layers, all exact:
//!
//! - [`graph`]: bitset-backed simple graphs, the named constructions
//!   (Turán graphs, joins, the extremal candidates) and [`graph6`] I/O;
//! - [`freeness`]: detection and counting for the forbidden families, with
//!   certified witnesses;
//! - [`transforms`]: the shifting and closure rewriting operations;
//! - [`formulas`]: closed-form extremal values, and [`search`]: the
//!   exhaustive ground-truth engine that verifies them and fuzzes the
//!   supporting lemmas.

#![forbid(unsafe_code)]

pub mod formulas;
pub mod freeness;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod transforms;

pub use formulas::{FormulaError, FormulaParams};
pub use freeness::{LinearForestWitness, MatchingWitness};
pub use graph::{
    complete_multipartite, extremal_construction, join, turan_graph, Coloring, ConstructionError,
    Graph, MAX_VERTICES,
};
pub use graph6::Graph6Error;
pub use search::{
    ConstraintSpec, ExtremalRecord, FuzzReport, FuzzViolation, LemmaId, Objective, SearchError,
    TheoremId, VerifyOptions, VerifyReport,
};
