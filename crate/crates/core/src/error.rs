use thiserror::Error;

/// Reasons a rotation `g - vw + uw` is refused.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotationError {
    #[error("vw = {v}-{w} is not an edge")]
    MissingEdge { v: usize, w: usize },
    #[error("uw = {u}-{w} is already an edge")]
    TargetPresent { u: usize, w: usize },
    #[error("u and w coincide ({0})")]
    SameVertex(usize),
    #[error("d(u) = {du} is smaller than d(v) = {dv}")]
    DegreeOrder { du: usize, dv: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order {0} exceeds the 64-vertex capacity")]
    Capacity(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{0}-{1} is already an edge")]
    EdgeExists(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed pattern: {0}")]
    Pattern(String),
    #[error("alpha must lie in [0, 1), got {0}")]
    Alpha(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("partition is not equitable: {0}")]
    NotEquitable(String),
    #[error("polynomial has no real root")]
    NoRealRoot,
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("construction infeasible: {0}")]
    Infeasible(String),
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("rotation refused: {0}")]
    Rotation(#[from] RotationError),
}

pub type Result<T> = std::result::Result<T, Error>;
