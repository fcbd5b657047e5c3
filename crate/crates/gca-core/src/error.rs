use crate::generator::GenId;
use thiserror::Error;

/// Errors raised by the arithmetic kernel.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown generator id {0}")]
    UnknownGenerator(GenId),
    #[error("unknown generator name `{0}`")]
    UnknownGeneratorName(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("truncation bound for generator `{0}` must be at least 2")]
    InvalidTruncation(String),
    #[error("mismatched generator tables")]
    TableMismatch,
    #[error("mismatched coefficient fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
}
