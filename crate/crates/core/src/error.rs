use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("negative density at vertex {0}")]
    NegativeDensity(usize),
    #[error("expected {expected} densities, got {actual}")]
    DensityCount { expected: usize, actual: usize },
    #[error("graph is not a forest")]
    NotAForest,
    #[error("graph is not a cactus")]
    NotACactus,
    #[error("sweep value must satisfy 0 < alpha <= f({vertex})")]
    SweepValue { vertex: usize },
    #[error("edge {0}-{1} is not part of the tree")]
    EdgeNotInTree(usize, usize),
    #[error("malformed monotone tree: {0}")]
    MalformedTree(String),
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("malformed file: {0}")]
    Format(String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
