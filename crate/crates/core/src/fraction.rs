//! Exact rational numbers over arbitrary-precision integers.
//!
//! A [`Fraction`] is *not* normalized on construction: formulas that produce a
//! numerator and denominator keep exactly those integers, and the common
//! factor between them is itself an object of study. Reduction is explicit
//! via [`Fraction::reduced`]. Equality and ordering compare values, so
//! `87/135 == 29/45` holds even though the representations differ.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An exact rational with positive denominator, stored as given.
#[derive(Debug, Clone)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    /// Builds `num/den`, normalizing only the sign so that the denominator is
    /// positive. The magnitude of both parts is preserved.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, Error> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if den.is_negative() {
            Ok(Fraction { num: -num, den: -den })
        } else {
            Ok(Fraction { num, den })
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Fraction { num: n.into(), den: BigInt::one() }
    }

    pub fn zero() -> Self {
        Fraction::from_integer(0)
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// The same value with the numerator/denominator GCD divided out.
    pub fn reduced(&self) -> Fraction {
        if self.num.is_zero() {
            return Fraction { num: BigInt::zero(), den: BigInt::one() };
        }
        let g = self.num.gcd(&self.den);
        Fraction { num: &self.num / &g, den: &self.den / &g }
    }

    pub fn is_reduced(&self) -> bool {
        if self.num.is_zero() {
            return self.den.is_one();
        }
        self.num.gcd(&self.den).is_one()
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.num.div_floor(&self.den)
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for Fraction {}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl Add for &Fraction {
    type Output = Fraction;

    fn add(self, rhs: &Fraction) -> Fraction {
        Fraction {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub for &Fraction {
    type Output = Fraction;

    fn sub(self, rhs: &Fraction) -> Fraction {
        Fraction {
            num: &self.num * &rhs.den - &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn sign_normalization_keeps_denominator_positive() {
        let f = frac(3, -7);
        assert_eq!(f.num(), &BigInt::from(-3));
        assert_eq!(f.den(), &BigInt::from(7));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Fraction::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn equality_is_by_value() {
        assert_eq!(frac(87, 135), frac(29, 45));
        assert_ne!(frac(87, 135), frac(30, 45));
    }

    #[test]
    fn reduction_preserves_value_and_is_idempotent() {
        let f = frac(567, 1215);
        let r = f.reduced();
        assert_eq!(r.num(), &BigInt::from(7));
        assert_eq!(r.den(), &BigInt::from(15));
        assert_eq!(r, f);
        assert_eq!(r.reduced().num(), r.num());
        assert_eq!(r.reduced().den(), r.den());
    }

    #[test]
    fn ordering_matches_rational_order() {
        assert!(frac(1, 3) < frac(2, 3));
        assert!(frac(7, 15) < frac(1, 2));
        assert!(frac(-1, 2) < frac(1, 1000));
        assert!(frac(5, 3) > frac(1, 1));
    }

    #[test]
    fn arithmetic_is_exact() {
        let sum = &frac(1, 3) + &frac(1, 9);
        assert_eq!(sum, frac(4, 9));
        let diff = &frac(7, 15) - &frac(1, 3);
        assert_eq!(diff, frac(2, 15));
    }

    #[test]
    fn floor_of_negative_rounds_down() {
        assert_eq!(frac(-1, 2).floor(), BigInt::from(-1));
        assert_eq!(frac(15, 2).floor(), BigInt::from(7));
        assert_eq!(frac(45, 1).floor(), BigInt::from(45));
    }
}
