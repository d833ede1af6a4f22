//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} out of supported range 1..=64")]
    VertexCount(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(usize),

    #[error("graph6 export supports at most 62 vertices (got {0}); use the internal format")]
    Graph6Export(usize),

    #[error("graph6: {msg} at byte {pos}")]
    Graph6 { pos: usize, msg: String },

    #[error("tree expression: {msg} at position {pos}")]
    Parse { pos: usize, msg: String },

    #[error("edge list is not a tree: {0}")]
    NotATree(String),

    #[error("construction `{name}`: {msg}")]
    Construction { name: &'static str, msg: String },

    #[error("unknown construction name `{0}`")]
    UnknownConstruction(String),

    #[error("enumeration supports 1..=10 vertices (got {0})")]
    EnumerationRange(usize),

    #[error("host graph already contains the pattern tree")]
    HostContainsPattern,

    #[error("{0}")]
    Invalid(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn construction(name: &'static str, msg: impl Into<String>) -> Self {
        Error::Construction {
            name,
            msg: msg.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
