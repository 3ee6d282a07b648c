//! Exact arithmetic for odd greedy unit-fraction expansions.
//!
//! The odd greedy algorithm expands a positive rational with odd denominator
//! into a sum of unit fractions with odd denominators, always taking the
//! largest admissible term. This crate provides the expansion engine together
//! with the constructive side of the story: which fractions have expansions
//! of a given length, and how those families reduce.
//!
//! - [`greedy`]: the step rule, the capped expansion loop, and the exact
//!   criterion for a tuple to be a greedy denominator sequence.
//! - [`length2`]: for a fixed even numerator, all families with length-2
//!   expansions.
//! - [`prefix`]: for a fixed greedy prefix of `m-1` denominators, the affine
//!   family of all values whose expansion has length `m` and starts there.
//! - [`reduction`]: valuation bounds on the GCD canceled when reducing
//!   `sigma_{m-1}/prod`, attainability of the bounds, and CRT-built witnesses.
//! - [`two_step`]: two-parameter families extending a fixed prefix of `m-2`
//!   denominators.
//! - [`oracle`]: brute-force scans that verify the generators' claims over
//!   bounded windows without consulting the family formulas.
//!
//! All arithmetic is exact over arbitrary-precision integers; there is no
//! floating point anywhere.

pub mod arith;
pub mod error;
pub mod family;
pub mod fraction;
pub mod greedy;
pub mod length2;
pub mod oracle;
pub mod prefix;
pub mod reduction;
pub mod two_step;

pub use arith::{divisors, factorize, is_prime, sigma, sum_of_reciprocals, vp, OddInt, PrimePower};
pub use error::Error;
pub use family::AffineFamily;
pub use fraction::Fraction;
pub use greedy::{
    first_greedy_violation, is_greedy_sequence, odd_greedy_expand, odd_greedy_expand_traced,
    odd_greedy_step, term_lower_bound, Expansion, ExpansionStatus, StepCap, DEFAULT_STEP_CAP,
};
pub use length2::{length2_families, Length2Witness};
pub use oracle::{
    scan_gcd_bounds, scan_lengths, scan_lengths_check, Counterexample, GcdBoundRecord, ScanReport,
    ScanWindow,
};
pub use prefix::{fixed_first_length2_family, next_term_threshold, prefix_family, PrefixFamily};
pub use reduction::{
    crt_solve, extremal_witness, gcd_valuation_bounds, is_attainable, prefix_primes,
    reduced_length2_families, sigma_valuation, Congruence, Extremum, ValuationBound,
};
pub use two_step::{bound_decreases, two_step_family, TwoStepFamily};
