use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(String, String),
    #[error("operation needs even dimension, got n = {0}")]
    OddDimension(usize),
    #[error("operation needs odd dimension, got n = {0}")]
    EvenDimension(usize),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("negative Radon-Hurwitz argument {0}")]
    NegativeArgument(i64),
    #[error("unsupported algebra type {mod8} for {what}")]
    UnsupportedType { mod8: u32, what: String },
    #[error("invalid spinbasis: {0}")]
    InvalidBasis(String),
    #[error("defining condition failed for {matrix} at unit {index}")]
    Condition { matrix: String, index: usize },
    #[error("no commuting idempotent family found")]
    NoIdempotentFamily,
    #[error("group closure exceeded {0} elements")]
    ClosureBound(usize),
    #[error("not in catalog: {0}")]
    NotInCatalog(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Falsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
