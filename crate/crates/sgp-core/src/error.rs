use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violates a documented precondition.
    #[error("{0}")]
    Domain(String),

    /// An input exceeds a resource cap of the exact algorithms.
    #[error("{what} is capped at {cap}, got {got}")]
    Cap {
        what: &'static str,
        cap: usize,
        got: usize,
    },

    /// A text input (edge list, family spec) could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Two routes that must agree disagreed; indicates a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
