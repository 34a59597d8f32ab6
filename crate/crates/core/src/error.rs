use thiserror::Error;

/// Errors reported by graph construction, parsing and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("graph is a path")]
    PathGraph,
    #[error("graph is not a {expected}")]
    WrongFamily { expected: &'static str },
    #[error("graph has pendant paths")]
    HasPendantPaths,
    #[error("vertex {0} is an articulation point")]
    ArticulationTarget(usize),
    #[error("edge {{{0}, {1}}} is a bridge")]
    BridgeTarget(usize, usize),
    #[error("ground set of size {size} exceeds cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
