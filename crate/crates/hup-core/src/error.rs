//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Arguments outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Configuration that the library does not support (e.g. dimension).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Geometric construction has no real solution.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// A quadrature rule or grid cannot resolve the requested integrand.
    #[error("insufficient resolution: {0}")]
    Resolution(String),

    /// Root bracketing failed on the given interval.
    #[error("bracketing failed: {0}")]
    Bracketing(String),
}

pub type Result<T> = std::result::Result<T, Error>;
