use thiserror::Error;

/// Failures raised while building, parsing or querying a digraph.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("arc {tail} -> {head} joins two vertices of the same side")]
    WithinSideArc { tail: String, head: String },
    #[error("duplicate arc {tail} -> {head}")]
    DuplicateArc { tail: String, head: String },
    #[error("loop at {vertex}")]
    Loop { vertex: String },
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("side sizes differ: |X| = {x}, |Y| = {y}")]
    SideSizeMismatch { x: usize, y: usize },
    #[error("digraph has no vertices")]
    Empty,
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("operation needs at least {min} vertices, digraph has {n}")]
    TooSmall { n: usize, min: usize },
    #[error("arc probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("operation requires a balanced bipartite digraph")]
    NotBipartite,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<GraphError>,
    },
}

impl GraphError {
    /// The underlying error with any line wrapper removed.
    pub fn kind(&self) -> &GraphError {
        match self {
            GraphError::AtLine { source, .. } => source.kind(),
            other => other,
        }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            GraphError::AtLine { line, .. } | GraphError::Syntax { line, .. } => Some(*line),
            _ => None,
        }
    }
}

/// Failures of the cycle engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("cycle length {m} is outside [2, {n}]")]
    BadLength { m: usize, n: usize },
    #[error("order {n} exceeds the exhaustive-search bound {max_n}; raise it explicitly to proceed")]
    TooLarge { n: usize, max_n: usize },
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("precondition unmet: d(x, V(C)) = {degree} < {required}")]
    PreconditionUnmet { degree: usize, required: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
