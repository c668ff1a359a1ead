//! Edge orderings of graphs in which every `d` consecutive edges form a
//! matching.
//!
//! The crate builds orderings that attain the known (cyclic) matching
//! sequencibility of complete graphs, complete bipartite graphs, cycles,
//! paths and related families ([`constructions`]), measures the matching
//! number of any ordering ([`ordering`]), and confirms optimal values with an
//! exhaustive search ([`solver`]). [`catalog`] ties the three together.

pub mod catalog;
pub mod constructions;
mod error;
pub mod format;
pub mod graph;
pub mod matching;
pub mod ordering;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{adjacent, Biadjacency, Edge, EdgeId, FamilySpec, Graph, VertexId};
pub use matching::max_matching_size;
pub use ordering::{
    is_matching, matching_number, matching_number_bruteforce, render_matrix, EdgeOrdering,
    MatchingNumberReport, OrderingMode, ViolatingPair,
};
pub use solver::{
    cms_exact, exists_ordering, ms_exact, SolveBudget, SolveResult, SolveStatus, Solver,
};
