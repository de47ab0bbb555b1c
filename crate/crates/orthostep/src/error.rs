//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by period arithmetic, profile construction and the oracle.
///
/// Usage errors (`EmptyPeriods`, `UnsupportedArity`, `ZeroPeriod`,
/// `BadPrecondition`) indicate invalid input. `DivisibilityViolation` and
/// `Internal` indicate a broken arithmetic assumption, which for valid inputs
/// means a bug, and are therefore surfaced loudly instead of being patched
/// over.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("period list is empty")]
    EmptyPeriods,

    #[error("unsupported arity {0}: between 1 and 4 periods are supported")]
    UnsupportedArity(usize),

    #[error("periods must be positive; position {0} is zero")]
    ZeroPeriod(usize),

    #[error("precondition violated: {0}")]
    BadPrecondition(String),

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("exact polynomial division left a nonzero remainder: {0}")]
    DivisibilityViolation(String),

    #[error("requested profile of {0} steps exceeds the supported size")]
    ProfileTooLarge(u128),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
