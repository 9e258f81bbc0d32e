use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("mode index {mode} out of range 1..={modes}")]
    ModeOutOfRange { mode: usize, modes: usize },

    #[error("exponent {exponent} out of range 0..{k}")]
    ExponentOutOfRange { exponent: usize, k: usize },

    #[error("exponent tuple has length {got}, expected {expected}")]
    ArityMismatch { got: usize, expected: usize },

    #[error("operands belong to different contexts")]
    ContextMismatch,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("Fock space dimension {dim} exceeds the configured limit {limit}")]
    FockTooLarge { dim: usize, limit: usize },

    #[error("operator is not diagonal (off-diagonal magnitude {0:e})")]
    NotDiagonal(f64),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
