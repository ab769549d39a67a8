use thiserror::Error;

use crate::graph::{Edge, Vertex};
use crate::lollipop::ActiveClosure;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("loop at line {line}")]
    LoopAtLine { line: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: Vertex },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {0:?} is not in the graph")]
    MissingEdge(Edge),
    #[error("graph has no vertices")]
    Empty,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("minimum degree {min_degree} is below the required {required}")]
    Precondition { min_degree: usize, required: usize },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid lollipop: {0}")]
    InvalidLollipop(String),
    #[error("rotation not applicable: {0}")]
    RuleNotApplicable(String),
    #[error(
        "active closure reached a fixpoint with {found} active vertices, {required} required"
    )]
    Shortfall {
        required: usize,
        found: usize,
        cycle: Vec<Vertex>,
        closure: Box<ActiveClosure>,
    },
    #[error("improvement loop exceeded {limit} iterations")]
    IterationLimit { limit: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlannerError {
    #[error("certificate does not match the graph: {0}")]
    Mismatch(String),
    #[error("cycle decomposition violated: {0}")]
    Decomposition(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MinorError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("malformed model: {0}")]
    Malformed(String),
    #[error("grid size {a} exceeds matrix dimension {m}")]
    GridTooLarge { a: usize, m: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("size guard exceeded: {what} is {actual}, guard is {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
}
