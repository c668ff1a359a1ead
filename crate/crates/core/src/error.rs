use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("unknown edge id {0}")]
    InvalidEdgeId(usize),
    #[error("loop at vertex {0} is not allowed")]
    LoopEdge(usize),
    #[error("parallel edge {{{0},{1}}} in a simple graph")]
    ParallelEdge(usize, usize),
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("target {target} outside 1..={max}")]
    InvalidTarget { target: usize, max: usize },
    #[error("not a permutation of the edge set: {0}")]
    NotPermutation(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("no known formula for {0}")]
    NoKnownFormula(String),
    #[error("search budget exceeded")]
    SearchBudgetExceeded,
    #[error("input is not a tree")]
    NotATree,
    #[error("ordering does not fit the biadjacency layout: {0}")]
    Layout(String),
}

pub type Result<T> = std::result::Result<T, Error>;
