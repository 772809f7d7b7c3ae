use thiserror::Error;

/// Errors raised anywhere in the pipeline. The CLI maps the variants onto exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: bad prime, bad quiver, inconsistent representation, non-brick, ...
    #[error("validation error: {0}")]
    Validation(String),
    /// Shape mismatch between matrices, representations or morphisms.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// A computation refused to start because it would exceed the configured budget.
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// A structural claim failed on the input (for example a socle class with two maxima).
    #[error("structural contradiction: {0}")]
    Structural(String),
    /// A step that cannot fail on valid input did fail; signals a bug or broken invariant.
    #[error("internal error: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for this error: 2 validation, 3 budget, 4 structural, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) | Error::Dimension(_) | Error::Json(_) => 2,
            Error::Budget(_) => 3,
            Error::Structural(_) => 4,
            Error::Internal(_) | Error::Io(_) => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
