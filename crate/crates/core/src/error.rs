use thiserror::Error;

use crate::picard::DivisorClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input lies outside the range where an operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// An operation was called with an argument violating its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Chamber reduction did not terminate within its step budget.
    #[error("chamber reduction of {input} exceeded {limit} steps")]
    IterationLimit { input: DivisorClass, limit: u64 },

    /// Two routes that must agree did not. Always a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by bad input rather than by a bug.
    pub fn is_user_error(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::Precondition(_) | Error::Parse(_))
    }
}
