//! Crate-wide error type.
//!
//! Exact-division failures inside degree formulas are *not* errors: they are
//! internal defects and panic. `Error` covers recoverable conditions: bad
//! input, resource guards and unsupported parameter ranges.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resource guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
