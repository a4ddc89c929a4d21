use thiserror::Error;

use crate::mixed::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence is empty")]
    Empty,

    #[error("n must be at least 1")]
    ZeroLength,

    #[error("entry {value} at position {position} is not positive")]
    NonPositive { position: usize, value: i64 },

    #[error("entry {value} at position {position} exceeds n = {n}")]
    EntryTooLarge { position: usize, value: i64, n: usize },

    #[error("not a parking function: car {car} fails to park")]
    NotParking { car: usize },

    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("source-sink condition violated: {0}")]
    SourceSink(Violation),

    #[error("region is empty: {0}")]
    Infeasible(String),

    #[error("point lies on the hyperplane x_{j} - x_{k} = {value}")]
    OnHyperplane { j: usize, k: usize, value: u8 },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("algorithm invariant violated: {0}")]
    AlgorithmInvariant(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
