use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("weight mismatch: {left} != {right}")]
    WeightMismatch { left: usize, right: usize },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("cannot shift by odd degree {0}")]
    OddShift(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("scale guard: {what} is {value}, limit is {limit}")]
    ScaleGuard {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("negative coefficient {coefficient} in degree {degree} of {context}")]
    NegativeCoefficient {
        context: &'static str,
        degree: usize,
        coefficient: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
