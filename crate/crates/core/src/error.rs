use thiserror::Error;

/// Errors raised by ring construction, parsing, and the module algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("division by {0} is not possible in this ring")]
    Division(String),

    #[error("({n}-1)! is not invertible in characteristic {characteristic}")]
    FactorialNotInvertible { n: usize, characteristic: u64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("not a constant (nonzero derivative): {0}")]
    NotConstant(String),

    #[error("duplicate candidate constants at positions {0} and {1}")]
    DuplicateCandidates(usize, usize),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid ring descriptor: {0}")]
    InvalidRing(String),

    #[error("the given vectors do not form a basis")]
    NotABasis,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
