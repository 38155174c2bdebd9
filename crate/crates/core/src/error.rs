use thiserror::Error;

/// Errors raised by field, matrix, code and verification routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field of order {p}^{k} exceeds the supported bound 2^20")]
    FieldTooLarge { p: u64, k: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("element index {index} does not belong to a field of order {order}")]
    ForeignElement { index: u32, order: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("empty matrix ({rows}x{cols})")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{what} needs {needed} steps, budget is {budget}")]
    BudgetExceeded { what: String, needed: u128, budget: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
