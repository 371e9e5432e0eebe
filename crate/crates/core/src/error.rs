use thiserror::Error;

/// Errors raised while validating inputs or auditing a construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generators must be positive, got a={a} b={b}")]
    NonPositive { a: i64, b: i64 },

    #[error("generators are not coprime: gcd({a}, {b}) = {gcd}")]
    NotCoprime { a: i64, b: i64, gcd: i64 },

    #[error("product a*b overflows the safety cap of {cap} (a={a} b={b})")]
    Overflow { a: i64, b: i64, cap: i64 },

    #[error("negative target {0}")]
    NegativeTarget(i64),

    #[error("invalid odd pair ({p}, {q}): {reason}")]
    InvalidPair {
        p: i64,
        q: i64,
        reason: &'static str,
    },

    #[error("verification failed: {0}")]
    VerificationFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
