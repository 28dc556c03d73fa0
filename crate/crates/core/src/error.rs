use thiserror::Error;

/// Errors produced by the radius, series and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("series did not converge: {0}")]
    Convergence(String),

    #[error("no root found: {0}")]
    NoRootFound(String),

    #[error("invalid tolerance {0}; must be positive and finite")]
    InvalidTolerance(f64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not found: {0}")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
