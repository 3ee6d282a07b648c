use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator must be nonzero")]
    ZeroDenominator,

    #[error("value must be positive")]
    NotPositive,

    #[error("expected an odd positive integer, got {0}")]
    NotOddPositive(BigInt),

    #[error("{0} is not prime")]
    NotPrime(BigInt),

    #[error("p-adic valuation of zero is undefined")]
    ZeroValuation,

    #[error("sequence must be nonempty")]
    EmptySequence,

    #[error("prefix must be nonempty")]
    EmptyPrefix,

    #[error("index out of range: i={i}, k={k}, len={len}")]
    IndexRange { i: usize, k: usize, len: usize },

    #[error("not a greedy sequence: the bound condition fails at i={i}, k={k}")]
    NotGreedy { i: usize, k: usize },

    #[error("no odd unit-fraction expansion exists: reduced denominator is even")]
    EvenDenominator,

    #[error("numerator must be even and positive, got {0}")]
    NotEvenPositive(BigInt),

    #[error("step cap must be at least 1")]
    InvalidCap,

    #[error("moduli are not pairwise coprime")]
    NonCoprimeModuli,

    #[error("prime {0} does not divide any prefix entry")]
    PrimeNotDividing(BigInt),

    #[error("extremal valuation is not attainable at prime {0}")]
    Unattainable(BigInt),

    #[error("invalid scan window: {0}")]
    InvalidWindow(String),
}
