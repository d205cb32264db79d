use thiserror::Error;

/// Errors raised by the word, tree and checker APIs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A 1-based inclusive index pair fell outside the word.
    #[error("index range [{i}, {j}] is invalid for a word of length {len}")]
    Range { i: usize, j: usize, len: usize },
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A documented precondition was not met by the caller.
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cannot parse word: {0}")]
    Parse(String),
    /// The request would exceed a configured size cap.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// A checked mathematical statement failed. Carries the offending input.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
