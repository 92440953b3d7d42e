use thiserror::Error;

/// Errors raised by model construction and the decision procedures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown event `{0}`")]
    UnknownEvent(String),

    #[error("unknown output symbol `{0}`")]
    UnknownSymbol(String),

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("cannot tokenize `{0}` over the alphabet")]
    BadWord(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no common corruption exists: {0}")]
    NoWitness(String),
}

impl Error {
    /// Errors that stem from a combination the decision procedures do not
    /// handle, as opposed to malformed input.
    pub fn is_unsupported(&self) -> bool {
        matches!(self, Error::Unsupported(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
