//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on inputs does not hold (bad arguments, wrong shapes).
    #[error("{0}")]
    Domain(String),

    /// Exact-arithmetic guarantees were violated; indicates a broken witness
    /// or a non-chain-map input rather than bad user data.
    #[error("integrity: {0}")]
    Integrity(String),

    /// Checked 64-bit coefficient arithmetic overflowed.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// A greedy collapse ran out of free faces (and backtracking budget).
    #[error("collapse failed: {0}")]
    CollapseFailed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}
