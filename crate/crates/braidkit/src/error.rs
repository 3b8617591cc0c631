use thiserror::Error;

/// Errors produced by braid computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("A[{0},{0}] is the trivial letter and cannot be used as a generator")]
    DiagonalLetter(usize),

    #[error("braid is not pure")]
    NotPure,

    #[error("free word length limit of {limit} letters exceeded")]
    FreeLengthLimit { limit: usize },

    #[error("handle reduction step limit of {limit} exceeded")]
    StepLimit { limit: usize },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for the errors raised when a configured resource cap is hit.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::FreeLengthLimit { .. } | Error::StepLimit { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
