use thiserror::Error;

/// Errors raised by construction, parsing and linear algebra.
///
/// Failed algebraic laws are never errors: verifiers return reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("singular matrix ({rows}x{cols}, rank {rank})")]
    Singular {
        rows: usize,
        cols: usize,
        rank: usize,
    },
    #[error("degenerate metric: {0}")]
    DegenerateMetric(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group order bound exceeded: S_{n} requested, bound is {bound}")]
    GroupTooLarge { n: usize, bound: usize },
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("invalid super twist: {0}")]
    InvalidSuperTwist(String),
    #[error("partitions are not nested: {0}")]
    NotNested(String),
    #[error("budget exceeded: estimated cost {estimate} > limit {limit}")]
    Budget { estimate: u128, limit: u128 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("convention violation: {0}")]
    Convention(String),
    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;
