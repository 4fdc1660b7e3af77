use thiserror::Error;

/// Errors raised by the algebra, ideal, hull and operator layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An element or ideal from a different backend was passed in.
    #[error("backend mismatch: {0}")]
    BackendMismatch(String),

    /// The operation exists but is not available for this backend.
    #[error("unsupported for {backend}: {reason}")]
    Unsupported { backend: String, reason: String },

    /// A partial operation was applied outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A checked identity failed. Carries the offending instance.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("invalid semigroup: {0}")]
    InvalidDescriptor(String),

    #[error("line {line}: field `{field}`: {message}")]
    Config {
        line: usize,
        field: String,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
