use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("index error: {0}")]
    Index(String),
    #[error("not divisible in Z[√2]: {0}")]
    NotDivisible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
