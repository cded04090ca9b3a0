use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// `Usage` and `TableMismatch` map to exit code 2 in the command line tool,
/// `Verification` and `DegreeClaim` to exit code 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials live over different variable tables")]
    TableMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("growth-degree claim failed: {0}")]
    DegreeClaim(String),
    #[error("integer overflow in fast summation path: {0}")]
    Overflow(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Usage(_)
                | Error::TableMismatch
                | Error::UnknownVariable(_)
                | Error::MissingAssignment(_)
                | Error::Resource(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
