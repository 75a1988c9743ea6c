use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QsympError {
    #[error("division by zero in ℚ(q)")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("q-factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("q-binomial lower index must be nonnegative, got {0}")]
    NegativeBinomialIndex(i64),
    #[error("rank must be at least 2, got {0}")]
    InvalidRank(i64),
    #[error("index {index} is out of range for rank {rank}")]
    InvalidIndex { index: i64, rank: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("invalid root label ({0}, {1}) for rank {2}")]
    InvalidRootLabel(i64, i64, usize),
    #[error("invalid operator: {0}")]
    InvalidOperator(String),
    #[error("rewriting fuel exhausted after {0} steps")]
    FuelExhausted(usize),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, QsympError>;
