use thiserror::Error;

/// Errors reported by hypergraph construction, spectral routines,
/// transformations and enumeration.
#[derive(Debug, Error)]
pub enum Error {
    #[error("hypergraph must have at least one vertex")]
    EmptyVertexSet,

    #[error("edge {index} has fewer than two vertices")]
    EdgeTooSmall { index: usize },

    #[error("edge {index} duplicates an earlier edge")]
    DuplicateEdge { index: usize },

    #[error("vertex id {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge index {index} out of range for {m} edges")]
    EdgeIndexOutOfRange { index: usize, m: usize },

    #[error("hypergraph is disconnected")]
    Disconnected,

    #[error("power iteration did not converge within {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("tolerance must be positive and finite")]
    InvalidTolerance,

    #[error("vector is not unit Euclidean norm")]
    NonUnitVector,

    #[error("vector has a negative entry")]
    NegativeVectorEntry,

    #[error("vector has no nonzero entry")]
    ZeroVector,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid family parameters: {0}")]
    InvalidParams(String),

    #[error("move target vertex {to} already lies in edge {edge}")]
    MoveTargetInEdge { to: usize, edge: usize },

    #[error("move source vertex {from} not contained in edge {edge}")]
    MoveSourceNotInEdge { from: usize, edge: usize },

    #[error("moved edge {edge} would duplicate an existing edge")]
    DuplicateResultEdge { edge: usize },

    #[error("vertex {vertex} to move is not contained in the source edge")]
    MovedVertexNotInSource { vertex: usize },

    #[error("vertex {vertex} to move already lies in the destination edge")]
    MovedVertexInDestination { vertex: usize },

    #[error("source edge would shrink below two vertices")]
    SourceEdgeTooSmall,

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("lemma hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("infeasible class specification: {0}")]
    InfeasibleClass(String),
}

pub type Result<T> = std::result::Result<T, Error>;
