//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside a function's domain or a violated parameter invariant.
    #[error("domain error: {0}")]
    Domain(String),
    /// Input formally valid but outside the supported numerical range.
    #[error("range error: {0}")]
    Range(String),
    /// An iteration or series did not converge within its configured cap.
    #[error("convergence failure: {0}")]
    Convergence(String),
    /// A root or eigenvalue bracket could not be established.
    #[error("bracket failure: {0}")]
    Bracket(String),
}

pub type Result<T> = std::result::Result<T, Error>;
