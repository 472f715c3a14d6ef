use thiserror::Error;

use crate::oracle::AccessModel;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("DIMACS line {line}: {message}")]
    Dimacs { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{probe} probe is not available in the {model} model")]
    ModelMismatch {
        probe: &'static str,
        model: AccessModel,
    },

    #[error("list position {position} outside 1..={degree} for vertex {vertex}")]
    ListPosition {
        vertex: usize,
        position: usize,
        degree: usize,
    },

    #[error("maximum degree {0} exceeds 2")]
    DegreeTooLarge(usize),

    #[error("{what} is limited to {limit} vertices, got {n}")]
    BudgetExceeded {
        what: &'static str,
        limit: usize,
        n: usize,
    },
}
