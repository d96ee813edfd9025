use thiserror::Error;

use crate::qnum::Rational;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational: zero denominator")]
    ZeroDenominator,

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("{0} is not a cut (it has a greatest or least element)")]
    NotACut(String),

    #[error("invalid multiplier {0}: only nonnegative scalars are admissible")]
    InvalidMultiplier(String),

    #[error("convex weight {0} is not in (0, 1)")]
    InvalidWeight(Rational),

    #[error("empty domain")]
    EmptyDomain,

    #[error("function domains do not match")]
    DomainMismatch,

    #[error("grid is not strictly increasing at {0}")]
    UnsortedGrid(Rational),

    #[error("grid does not contain {0}")]
    MissingGridPoint(Rational),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero ray vector")]
    ZeroRay,

    #[error("invalid grid window: {0}")]
    InvalidWindow(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_error(what: &'static str, input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        what,
        input: input.to_string(),
        reason: reason.into(),
    }
}
