//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by kernel evaluation, series arithmetic and identity checks.
#[derive(Debug, Error)]
pub enum Error {
    /// A degree or order limit was exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An input lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The caller asked for something the API cannot interpret
    /// (unknown identity id, unknown catalog name, malformed parameter).
    #[error("usage error: {0}")]
    Usage(String),

    /// Exact-coefficient mode was requested but a parameter is not rational.
    #[error("exact mode unavailable: {0}")]
    ModeUnavailable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
