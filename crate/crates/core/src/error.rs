use thiserror::Error;

/// Errors raised by the library's validating constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("step d must be at least 1, got {0}")]
    InvalidStep(i64),
    #[error("sign must be -1 or +1, got {0}")]
    InvalidSign(i64),
    #[error("denominator must have constant term 1")]
    NonUnitConstant,
}

pub type Result<T> = std::result::Result<T, Error>;
