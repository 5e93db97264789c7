use thiserror::Error;

use crate::symfunc::Basis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("dominance requires equal sizes, got {left} and {right}")]
    SizeMismatch { left: i64, right: i64 },

    #[error("raising operator R_{{{i},{j}}} is invalid for a vector of length {len}")]
    InvalidRaising { i: usize, j: usize, len: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cannot combine {left} and {right} terms without an explicit conversion")]
    MixedBasis { left: Basis, right: Basis },

    #[error("pair is not bad; the involution is only defined on bad pairs")]
    NotBadPair,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("negative exponent {0} in alternant")]
    NegativeExponent(i64),

    #[error("oracle left a nonzero residual: {0}")]
    OracleResidual(String),

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
