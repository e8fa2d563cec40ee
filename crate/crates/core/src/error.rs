use thiserror::Error;

/// Errors produced by graph construction, parsing and the verification
/// routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is disconnected: vertex {source_vertex} reaches {reached} of {order} vertices")]
    DisconnectedGraph {
        source_vertex: usize,
        reached: usize,
        order: usize,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("malformed sequence: {0}")]
    MalformedSequence(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("invalid order {order}: {reason}")]
    InvalidOrder { order: usize, reason: &'static str },
    #[error("invalid spider spec: {0}")]
    InvalidSpec(String),
    #[error("no branch vertex admits a path-leg split")]
    NoSplit,
    #[error("infeasible instance: {0}")]
    Infeasible(String),
    #[error("infeasible tuple: {0}")]
    InfeasibleTuple(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
