use thiserror::Error;

/// Everything that can go wrong inside the engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: expected {expected} variables, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("exponent overflow: value exceeds 2^31 - 1")]
    Overflow,

    #[error("resource limit: {what} is {actual}, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("timed out after {millis} ms")]
    Timeout { millis: u64 },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
