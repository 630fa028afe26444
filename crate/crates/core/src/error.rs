//! Error type shared by all layers of the crate.

use thiserror::Error;

/// Errors produced by group construction, path machinery and the verifier.
#[derive(Debug, Error)]
pub enum Error {
    /// The diagram string could not be parsed or names an unsupported group.
    #[error("invalid diagram: {0}")]
    Diagram(String),

    /// An element description (word or one-line permutation) is malformed.
    #[error("invalid element: {0}")]
    Element(String),

    /// A reflection ordering is requested from unsuitable data.
    #[error("invalid reflection ordering: {0}")]
    Ordering(String),

    /// A configured resource cap would be exceeded; carries a description of
    /// the cap and the offending size so callers can report it precisely.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    /// A flip is requested in a position where the two-path middle count is
    /// odd, so no pairing exists. This would contradict the evenness lemma
    /// and indicates corrupted input rather than a user error.
    #[error("odd middle count between {u} and {v}: {count}")]
    OddMiddleCount { u: u32, v: u32, count: usize },

    /// Polynomial arithmetic or factoring failed.
    #[error(transparent)]
    Poly(#[from] bipoly::Error),

    /// Report or cache I/O failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Report serialization failed.
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

impl Error {
    /// True when the error is a resource-cap violation, either from this
    /// crate or from the polynomial factoring layer. The command-line tool
    /// maps these to their own exit code.
    pub fn is_cap_exceeded(&self) -> bool {
        match self {
            Error::CapExceeded(_) => true,
            Error::Poly(bipoly::Error::CapExceeded(_)) => true,
            _ => false,
        }
    }
}
