use thiserror::Error;

/// Errors produced across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid family parameters: {0}")]
    InvalidParams(String),

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("path endpoints must differ")]
    SameEndpoints,

    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not a bipartite chain graph: {0}")]
    NotChainGraph(String),

    #[error("no closed form is known for {0}")]
    NoClosedForm(String),
}

pub type Result<T> = std::result::Result<T, Error>;
