use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("pole at specialization {spec}: denominator {den} vanishes")]
    PoleAtSpecialization { spec: String, den: String },
    #[error("pole in Gram-Schmidt at {0}")]
    PoleInGramSchmidt(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid rectangle: {0}")]
    InvalidRect(String),
    #[error("index longer than {0}")]
    LengthTooLarge(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    InexactDivision(String),
}
