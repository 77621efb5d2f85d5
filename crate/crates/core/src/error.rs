use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("range [{lo}, {hi}) exceeds the configured ceiling {ceiling}")]
    RangeTooLarge { lo: u64, hi: u64, ceiling: u64 },

    #[error("inverted range: lo {lo} > hi {hi}")]
    InvertedRange { lo: u64, hi: u64 },

    #[error("no prime at or below {x}; argument must be >= 2")]
    UndefinedBelowTwo { x: f64 },

    #[error("{value} is odd; an even argument is required")]
    InputOdd { value: u64 },

    #[error("{value} is even; an odd argument is required")]
    InputEven { value: u64 },

    #[error("{value} is below the smallest admissible argument {min}")]
    InputTooSmall { value: u64, min: u64 },

    #[error("index {n} is outside the model domain (log singularity at n = 0)")]
    LogSingularity { n: u64 },

    #[error("{x} exceeds the exact-count limit {limit}; use the sieve oracle instead")]
    ExactLimitExceeded { x: u64, limit: u64 },

    #[error("{value} is not a prime, as the operation requires")]
    NotPrime { value: u64 },

    #[error("2n+1 = {p_prime} is not an odd prime > 3; no verdict applies")]
    CompositeModulus { p_prime: u64 },

    #[error("exponent argument {value} exceeds the guard {max}")]
    ExponentTooLarge { value: u64, max: u64 },

    #[error("internal cross-check failed: {what}")]
    Inconsistency { what: String },
}

pub type Result<T> = std::result::Result<T, Error>;
