use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRangeVertex { vertex: usize, n: usize },
    #[error("edge {edge:?} has {got} vertices, expected {expected}")]
    WrongEdgeSize { edge: Vec<usize>, expected: usize, got: usize },
    #[error("edge {edge:?} repeats a vertex")]
    DuplicateVertexInEdge { edge: Vec<usize> },
    #[error("uniformity mismatch: {left} vs {right}")]
    UniformityMismatch { left: usize, right: usize },
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("no (w, v) pair satisfies the grid constraints")]
    EmptyGrid,
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("k = {k} out of range, expected {min} <= k <= {max}")]
    KOutOfRange { k: usize, min: usize, max: usize },
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("multiplicity vector has length {got}, pattern has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("zero multiplicity for pattern vertex {0}")]
    ZeroMultiplicity(usize),
    #[error("not a hole: {0}")]
    NotAHole(String),
    #[error("multigraph hypothesis fails")]
    HypothesisFails,
    #[error("property violated in verified reduction: {0}")]
    PropertyViolation(String),
    #[error("unknown claim: {0}")]
    UnknownClaim(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
