use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid root system {series}{rank}: {reason}")]
    InvalidRootSystem { series: char, rank: usize, reason: String },
    #[error("weight is not dominant")]
    NotDominant,
    #[error("invalid representation `{name}` for {algebra}: {reason}")]
    InvalidRep { name: String, algebra: String, reason: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("factor index {index} out of range (algebra has {count} factors)")]
    FactorIndex { index: usize, count: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("record `{id}`: field `{field}`: {msg}")]
    Schema { id: String, field: String, msg: String },
    #[error("linear program: {0}")]
    Lp(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
}

pub type Result<T> = std::result::Result<T, Error>;
