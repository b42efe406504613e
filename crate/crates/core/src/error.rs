use std::time::Duration;

use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge ({0}, {1}) is not present in the graph")]
    MissingEdge(usize, usize),

    #[error("{family} requires n >= {min}, got {got}")]
    FamilyTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },

    #[error("operand graph must be nonempty")]
    EmptyOperand,

    #[error("vertex set {0:?} does not induce a complete subgraph")]
    NotAClique(Vec<usize>),

    #[error("clique sizes differ: {0} vs {1}")]
    CliqueSizeMismatch(usize, usize),

    #[error("clique contains duplicate vertices: {0:?}")]
    DuplicateVertex(Vec<usize>),

    #[error("coloring covers {got} vertices but the graph has {expected}")]
    DomainMismatch { expected: usize, got: usize },

    #[error("color classes must be nonempty: color {0} is unused")]
    EmptyColorClass(usize),

    #[error("TDC-number undefined: {0}")]
    Undefined(String),

    #[error("{what} exceeds cap: {got} > {cap}")]
    CapExceeded {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    #[error("time budget of {0:?} exhausted; value unknown")]
    BudgetExhausted(Duration),

    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("{0}")]
    OutOfDomain(String),

    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn undefined_isolated() -> Self {
        Error::Undefined("graph has an isolated vertex".into())
    }

    pub(crate) fn undefined_empty() -> Self {
        Error::Undefined("graph has no vertices".into())
    }
}
