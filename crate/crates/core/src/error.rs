//! Error types shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed textual input (graph6, edge lists, polynomials, kind syntax).
    /// `offset` is a byte offset into the offending input when known.
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    /// Structurally valid input that violates an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two independently computed routes to the same verdict disagreed.
    /// This is a bug in the implementation or a falsified theorem; it is
    /// never silently resolved.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            msg: msg.into(),
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}
