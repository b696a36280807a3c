use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("wiener undefined on disconnected graph")]
    Disconnected,
    #[error("capacity exceeded: {what} needs {needed} vertices, limit is {limit}")]
    Capacity {
        what: &'static str,
        needed: usize,
        limit: usize,
    },
    #[error("{op} is guarded at n <= {limit}, got n = {n}")]
    SizeGuard { op: &'static str, limit: usize, n: usize },
    #[error("{op} is guarded at {limit} edges, got {m}")]
    EdgeBudget { op: &'static str, limit: usize, m: usize },
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input graph is not a tree")]
    NotATree,
    #[error("graph has no edges")]
    Empty,
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("undefined removal: deleting {0:?} disconnects the graph")]
    UndefinedRemoval(Vec<usize>),
}

pub fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
