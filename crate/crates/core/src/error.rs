use thiserror::Error;

use crate::coeff::Domain;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch { left: Domain, right: Domain },

    #[error("variable count mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("monomial order mismatch")]
    OrderMismatch,

    #[error("wrong coefficient domain: {0}")]
    WrongDomain(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid presentation: {0}")]
    Validation(String),

    #[error("base ring mismatch: {left} vs {right}")]
    BaseMismatch { left: String, right: String },

    #[error("point {point} is not a prime of base {base}")]
    IncompatiblePoint { point: String, base: String },

    #[error("unsupported base ring: {0}")]
    UnsupportedBase(String),

    #[error("inconsistent witness: {0}")]
    InconsistentWitness(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("not a triplet: {0}")]
    NotATriplet(String),

    #[error("algebra is not zero-dimensional: {0}")]
    NotZeroDimensional(String),

    #[error("invalid request: {0}")]
    InvalidRequest(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),

    #[error("cannot factor {0}: cofactor exceeds 64 bits")]
    Factorization(String),
}
