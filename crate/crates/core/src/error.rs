use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared across the library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("prime set must be nonempty")]
    EmptyPrimeSet,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime set must be strictly increasing (got {0} after {1})")]
    UnsortedPrimes(u64, u64),

    #[error("zero has no representation as an S-unit")]
    ZeroValue,

    #[error("operands belong to different prime sets")]
    PrimeSetMismatch,

    #[error("{0} is not an S-integer for this prime set")]
    NotAnSInteger(BigInt),

    #[error("candidate does not satisfy the equation")]
    NotASolution,

    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("search space of {required} nodes exceeds the budget of {budget}")]
    BudgetExceeded { required: BigInt, budget: u64 },

    #[error("internal consistency check failed: {0}")]
    InternalInconsistency(&'static str),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("sequence provides {have} terms but {needed} are required")]
    SequenceTooShort { needed: usize, have: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
