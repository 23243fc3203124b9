use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial upper index must be non-negative, got {0}")]
    NegativeUpperIndex(i64),

    /// Parameters violate an operation's precondition.
    #[error("invalid parameters: {0}")]
    Domain(String),

    /// A quotient that must be exact left a remainder. Never caused by
    /// valid input; signals an arithmetic defect.
    #[error("integrity failure in {context}: {detail}")]
    Integrity { context: &'static str, detail: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn integrity(context: &'static str, detail: impl Into<String>) -> Self {
        Error::Integrity {
            context,
            detail: detail.into(),
        }
    }
}
