//! Error type shared by the polynomial routines.

/// Errors reported by polynomial arithmetic and factorization.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Exact division was requested but the divisor does not divide the
    /// dividend in ℤ[x, y] (or ℤ[t]).
    #[error("exact division failed: divisor does not divide dividend")]
    DivisionFails,

    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,

    /// An operation exceeded a configured resource cap.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    /// A polynomial string could not be parsed.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
