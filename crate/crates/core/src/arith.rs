//! Integer building blocks: odd positive integers, prime powers, elementary
//! symmetric polynomials, p-adic valuations, and divisor enumeration.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::fraction::Fraction;

/// An odd integer that is at least 1. Expansion denominators, family
/// thresholds, and constructed witnesses all carry this type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddInt(BigInt);

impl OddInt {
    pub fn new(value: impl Into<BigInt>) -> Result<Self, Error> {
        let value = value.into();
        if value.is_positive() && value.is_odd() {
            Ok(OddInt(value))
        } else {
            Err(Error::NotOddPositive(value))
        }
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn into_value(self) -> BigInt {
        self.0
    }
}

impl From<OddInt> for BigInt {
    fn from(x: OddInt) -> BigInt {
        x.0
    }
}

impl fmt::Display for OddInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Copies the underlying integers out of a slice of odd integers.
pub fn values(xs: &[OddInt]) -> Vec<BigInt> {
    xs.iter().map(|x| x.0.clone()).collect()
}

/// Product of a slice of integers; 1 for the empty slice.
pub fn product(xs: &[BigInt]) -> BigInt {
    xs.iter().product()
}

/// A prime together with a nonnegative exponent. The constructor checks
/// primality by trial division, which is adequate for the input sizes here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePower {
    p: BigInt,
    e: u32,
}

impl PrimePower {
    pub fn new(p: impl Into<BigInt>, e: u32) -> Result<Self, Error> {
        let p = p.into();
        if !is_prime(&p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimePower { p, e })
    }

    pub fn prime(&self) -> &BigInt {
        &self.p
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    pub fn value(&self) -> BigInt {
        self.p.pow(self.e)
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    if n == &two {
        return true;
    }
    if n.is_even() {
        return false;
    }
    let mut i = BigInt::from(3);
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            return false;
        }
        i += 2;
    }
    true
}

/// Factors a positive integer into prime powers with increasing primes.
/// `factorize(1)` is the empty list.
pub fn factorize(n: &BigInt) -> Result<Vec<PrimePower>, Error> {
    if !n.is_positive() {
        return Err(Error::NotPositive);
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut take = |p: &BigInt, rest: &mut BigInt| {
        let mut e = 0u32;
        while (&*rest % p).is_zero() {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push(PrimePower { p: p.clone(), e });
        }
    };
    take(&BigInt::from(2), &mut rest);
    let mut p = BigInt::from(3);
    while &p * &p <= rest {
        take(&p, &mut rest);
        p += 2;
    }
    if rest > BigInt::one() {
        out.push(PrimePower { p: rest, e: 1 });
    }
    Ok(out)
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: &BigInt) -> Result<Vec<BigInt>, Error> {
    let factors = factorize(n)?;
    let mut out = vec![BigInt::one()];
    for pp in &factors {
        let mut next = Vec::with_capacity(out.len() * (pp.e as usize + 1));
        let mut power = BigInt::one();
        for _ in 0..=pp.e {
            for d in &out {
                next.push(d * &power);
            }
            power *= &pp.p;
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Elementary symmetric polynomial of degree `k` evaluated at `xs`, computed
/// by the one-pass recurrence. Returns 1 when `k = 0` (even for empty `xs`)
/// and 0 when `k < 0` or `k > |xs|`.
pub fn sigma(k: i64, xs: &[BigInt]) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let k = k as usize;
    if k > xs.len() {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for (seen, x) in xs.iter().enumerate() {
        for j in (1..=k.min(seen + 1)).rev() {
            row[j] = &row[j] + x * &row[j - 1];
        }
    }
    row.swap_remove(k)
}

/// Exponent of the largest power of `p` dividing `n`. `p` must be at least 2;
/// the valuation of 0 is undefined.
pub fn vp(p: &BigInt, n: &BigInt) -> Result<u64, Error> {
    debug_assert!(p >= &BigInt::from(2));
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let mut rest = n.abs();
    let mut v = 0u64;
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(v);
        }
        rest = q;
        v += 1;
    }
}

/// Sum of the reciprocals of `xs` as the unreduced fraction whose numerator
/// is the degree-`m-1` symmetric polynomial and whose denominator is the
/// plain product. The empty sum is 0/1.
pub fn sum_of_reciprocals(xs: &[OddInt]) -> Fraction {
    if xs.is_empty() {
        return Fraction::zero();
    }
    let vals = values(xs);
    let num = sigma(vals.len() as i64 - 1, &vals);
    let den = product(&vals);
    Fraction::new(num, den).expect("product of positive integers is nonzero")
}
