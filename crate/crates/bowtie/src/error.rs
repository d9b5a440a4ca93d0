use thiserror::Error;

/// Errors produced by graph construction, parsing, and the metric toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph is disconnected: no path between vertices {u} and {v}")]
    Disconnected { u: usize, v: usize },
    #[error("slice index {k} out of range for a pair at distance {dist}")]
    SliceOutOfRange { k: u32, dist: u32 },
    #[error("line graph requires at least one edge")]
    EmptyEdgeSet,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("malformed input at {context}: {message}")]
    Malformed { context: String, message: String },
    #[error("unsupported graph size {0} (encoder handles n <= 258047)")]
    UnsupportedSize(usize),
    #[error("({0}, {1}, {2}) is not a metric triangle")]
    NotMetricTriangle(usize, usize, usize),
}

impl Error {
    pub(crate) fn malformed(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Malformed {
            context: context.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
