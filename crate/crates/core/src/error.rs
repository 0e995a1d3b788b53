use thiserror::Error;

/// Errors raised by the house-market library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MarketError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Input that is well-formed but outside the domain an operation needs
    /// (for example a profile that is not single-peaked on the given axis).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("instance size {n} exceeds the enumeration bound {bound}")]
    TooLarge { n: usize, bound: usize },

    #[error("dynamics did not terminate within {0} steps")]
    StepLimit(usize),
}

pub type Result<T> = std::result::Result<T, MarketError>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(MarketError::InvalidArgument(msg.into()))
}
