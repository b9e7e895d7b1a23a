use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("block {block:?} is not a clique")]
    NotBlockGraph { block: Vec<usize> },
    #[error("graph is not a tree")]
    NotATree,
    #[error("k = {k} outside the admissible range {min}..={max}")]
    InvalidK { k: usize, min: usize, max: usize },
    #[error("guard exceeded: {what} is {size}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("degree sequence {0:?} is not realizable as a tree")]
    NonRealizable(Vec<usize>),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid block shift: {0}")]
    InvalidMove(String),
    #[error("non-integral total {0}")]
    NonIntegral(String),
    #[error("arithmetic overflow in the chosen scalar type")]
    Overflow,
}
