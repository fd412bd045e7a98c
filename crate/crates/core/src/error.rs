use thiserror::Error;

/// A problem with textual input, located by 1-based line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("size cap exceeded: {what} needs about {estimate}, cap is {cap}")]
    CapExceeded { what: String, estimate: u128, cap: u128 },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn cap(what: impl Into<String>, estimate: u128, cap: u128) -> Self {
        Error::CapExceeded { what: what.into(), estimate, cap }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
