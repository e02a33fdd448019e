use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NfError {
    /// An argument outside the domain of an operation (zero where nonzero is
    /// required, composite where a prime is required, and so on).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("polynomial is not monic (leading coefficient {0})")]
    NotMonic(String),

    #[error("polynomial is reducible; found factor {0}")]
    Reducible(String),

    #[error("degree {0} is too small; number fields must have degree at least 2")]
    DegreeTooSmall(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("prime {0} does not fit in a machine word")]
    PrimeTooLarge(String),

    /// A mathematical invariant that must hold failed to hold.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, NfError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(NfError::Domain(msg.into()))
}
