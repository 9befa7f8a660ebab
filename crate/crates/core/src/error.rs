use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank: sl_{0} requires n >= 2")]
    InvalidRank(usize),

    #[error("unknown letter {0}")]
    UnknownLetter(String),

    #[error("elements are canonical for different orders ({0} vs {1})")]
    OrderMismatch(String, String),

    #[error("letter {0} is outside a ⊕ n")]
    DomainViolation(String),

    #[error("dense solve too large: {size} exceeds guard {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("invalid degree {0}")]
    InvalidDegree(usize),

    #[error("element is not central; [z, {witness}] != 0")]
    NotCentral { witness: String },

    #[error("degenerate degree {0}: annihilators need a central element of degree >= 2")]
    DegenerateDegree(usize),

    #[error("certification failure: {flag}")]
    CertificationFailure { flag: String },

    #[error("polynomial is not Weyl-invariant (fails under element {0})")]
    InvarianceViolation(usize),

    #[error("singular matrix")]
    Singular,

    #[error("annihilator is not certified")]
    Uncertified,

    #[error("expected a numeric spectral parameter")]
    NotNumeric,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
