use thiserror::Error;

/// Errors produced by graph construction and the resolution engine.
///
/// `Internal` marks a violated structural invariant: the engine refuses to
/// return a possibly-wrong graph and reports the broken assumption instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tile index out of range: {0}")]
    TileRange(String),

    #[error("edge {0} is not admissible here")]
    BadEdge(String),

    #[error("label mismatch on glued edge: {0} vs {1}")]
    LabelMismatch(String, String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! internal {
    ($($arg:tt)*) => {
        return Err($crate::error::Error::Internal(format!($($arg)*)))
    };
}

macro_rules! invalid {
    ($($arg:tt)*) => {
        return Err($crate::error::Error::Invalid(format!($($arg)*)))
    };
}

pub(crate) use {internal, invalid};
