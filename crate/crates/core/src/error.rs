use thiserror::Error;

/// Errors raised by table construction and group-level operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("group order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("group order {order} exceeds the construction limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("subgroup does not belong to this group")]
    ForeignSubgroup,
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid constructor parameters: {0}")]
    InvalidParameters(String),
}

/// Error from parsing a group expression, with the byte offset where it failed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at position {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumberError {
    #[error("n must be positive")]
    Zero,
    #[error("n = {0} exceeds the supported range (at most 1000000)")]
    TooLarge(u64),
    #[error("n = {0} is a prime power; the formula needs at least two distinct prime factors")]
    PrimePower(u64),
    #[error("invalid shape parameters: {0}")]
    InvalidShape(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("order {order} is not in the catalog; supported orders: {supported}")]
    UnsupportedOrder { order: usize, supported: String },
    #[error("order {0} is only partially catalogued")]
    Incomplete(usize),
    #[error("catalog inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("{n} is a {kind} number; no counterexample exists")]
    NotApplicable { n: u64, kind: &'static str },
    #[error("no construction available for n = {n}: {reason}")]
    Gap { n: u64, reason: String },
    #[error("witness for n = {n} failed verification: {reason}")]
    VerificationFailed { n: u64, reason: String },
    #[error(transparent)]
    Number(#[from] NumberError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
