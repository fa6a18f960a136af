use thiserror::Error;

/// Errors raised by the library.
///
/// A `NO` answer to a decision problem is never an error; those are reported
/// through `Option` or dedicated outcome enums. Errors are reserved for
/// malformed input, tripped size guards and broken internal invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("invalid token `{0}`: tokens must be non-empty and contain no whitespace")]
    InvalidToken(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("edge {{{0}, {1}}} listed twice")]
    DuplicateEdge(String, String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("malformed instance: {0}")]
    Malformed(String),
    #[error("size guard tripped: {what} is {actual}, limit is {limit}")]
    SizeGuard {
        what: &'static str,
        actual: u64,
        limit: u64,
    },
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}
