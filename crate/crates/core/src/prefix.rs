//! All rationals whose odd greedy expansion has length `m` and starts with a
//! fixed greedy prefix of `m-1` odd denominators.
//!
//! Given such a prefix, the admissible final denominators are exactly the
//! odd integers strictly above every [`term_lower_bound`] of the prefix;
//! writing `b` for the smallest of them, the values form the single affine
//! family
//! `(sigma_{m-1}(prefix, b) + 2*sigma_{m-2}(prefix)*t) / (prod(prefix)*b + 2*prod(prefix)*t)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith::{product, sigma, values, OddInt};
use crate::error::Error;
use crate::family::AffineFamily;
use crate::fraction::Fraction;
use crate::greedy::{first_greedy_violation, term_lower_bound};

/// A greedy prefix with its threshold `b` and the family of values whose
/// expansions extend the prefix by one term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixFamily {
    pub prefix: Vec<OddInt>,
    pub b: OddInt,
    pub family: AffineFamily,
}

/// The smallest odd positive integer that may follow `prefix` in a greedy
/// sequence: the least odd integer strictly greater than every term bound,
/// clamped to at least 1. The empty prefix yields 1.
pub fn next_term_threshold(prefix: &[OddInt]) -> Result<OddInt, Error> {
    if prefix.is_empty() {
        return OddInt::new(1);
    }
    if let Some((i, k)) = first_greedy_violation(prefix) {
        return Err(Error::NotGreedy { i, k });
    }
    let m = prefix.len() + 1;
    let q = (1..=prefix.len())
        .map(|i| term_lower_bound(prefix, i, m))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .max()
        .expect("prefix is nonempty");
    // Smallest integer > q, bumped to odd parity; the next odd down is <= q.
    let mut b = q.floor() + BigInt::one();
    if b.is_even() {
        b += 1;
    }
    if b < BigInt::one() {
        b = BigInt::one();
    }
    assert!(Fraction::from_integer(b.clone()) > q, "threshold must exceed every bound");
    OddInt::new(b)
}

/// The threshold and affine family for a greedy prefix, covering every
/// rational whose expansion has length `prefix.len() + 1` and starts with the
/// prefix.
pub fn prefix_family(prefix: &[OddInt]) -> Result<PrefixFamily, Error> {
    let b = next_term_threshold(prefix)?;
    let vals = values(prefix);
    let prod = product(&vals);
    let m = vals.len() as i64 + 1;
    let mut with_b = vals.clone();
    with_b.push(b.value().clone());
    let num_const = sigma(m - 1, &with_b);
    let num_coeff = 2 * sigma(m - 2, &vals);
    let den_const = &prod * b.value();
    let den_coeff = 2 * prod;
    let family = AffineFamily::new(num_const, num_coeff, den_const, den_coeff, "t");
    Ok(PrefixFamily { prefix: prefix.to_vec(), b, family })
}

/// Closed form of [`prefix_family`] for a single fixed first denominator:
/// `((x^2+3)/2 + 2t) / ((x^3+3x)/2 - x^2 + 2xt)`.
pub fn fixed_first_length2_family(x1: &OddInt) -> AffineFamily {
    let x = x1.value();
    let num_const = (x * x + 3) / 2;
    let den_const = (x * x * x + 3 * x) / 2 - x * x;
    let family = AffineFamily::new(num_const, 2, den_const, 2 * x, "t");
    let general = prefix_family(std::slice::from_ref(x1))
        .expect("a single odd integer is always a greedy prefix");
    assert_eq!(family, general.family, "closed form disagrees with the general construction");
    family
}
