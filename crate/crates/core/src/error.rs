use thiserror::Error;

/// Errors reported by graph construction and the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop ({0},{0}) is not allowed")]
    SelfLoop(usize),

    #[error("vertices must be distinct, got {0} twice")]
    SameVertex(usize),

    #[error("graph of order {order} exceeds the limit of {limit} for {what}")]
    TooLarge {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("graph is disconnected, {what} requires a connected graph")]
    Disconnected { what: &'static str },

    #[error("{what} is not defined for complete graphs")]
    CompleteGraph { what: &'static str },

    #[error("invalid family parameter: {0}")]
    InvalidFamily(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("verification discrepancy: {0}")]
    Discrepancy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
