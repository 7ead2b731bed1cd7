//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong in a computation.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iteration failed to converge; carries the best estimate found
    /// and the gap between the last two refinements.
    #[error("no convergence: {context} (best estimate {best}, gap {gap})")]
    NoConvergence {
        context: String,
        best: String,
        gap: String,
    },

    /// A truncated series was asked for a coefficient beyond its known order.
    /// Callers retry with a larger expansion order.
    #[error("series order {have} too small, need at least {need}")]
    OrderTooSmall { have: i64, need: i64 },

    /// Valid input, but outside the subset this implementation supports.
    #[error("unsupported domain: {0}")]
    Unsupported(String),

    /// Numerical conditioning too poor to proceed (e.g. |q| too close to 1).
    #[error("conditioning error: {0}")]
    Conditioning(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
