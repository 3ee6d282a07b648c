//! All fractions with a fixed even numerator whose odd greedy expansion has
//! length 2.
//!
//! For an even numerator `n`, each odd `r < 2n` yields one affine family of
//! denominators `n*M*(1+2t) - r`, where `M` collects a prime power
//! `p^max(ceil((v_p(r)-v_p(n))/2), 0)` for every prime `p` dividing `r`.
//! Restricting to `r` coprime to `n` (where the exponents simplify to
//! `ceil(v_p(r)/2)`) gives exactly the reduced fractions with numerator `n`
//! and a length-2 expansion. A sum of two odd-denominator unit fractions
//! always has even numerator, so odd numerators are rejected outright.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith::{factorize, vp, OddInt, PrimePower};
use crate::error::Error;
use crate::family::AffineFamily;

/// The data defining one length-2 family: the offset `r` and the clamped
/// half-valuation exponent for each prime of `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Length2Witness {
    pub r: OddInt,
    pub exponents: Vec<PrimePower>,
}

impl Length2Witness {
    /// The product of the witness prime powers, the factor `M` in the family
    /// denominator `n*M*(1+2t) - r`.
    pub fn modulus(&self) -> BigInt {
        self.exponents.iter().map(PrimePower::value).product()
    }
}

/// Ceiling of `x / 2` for a possibly negative integer `x`.
fn ceil_half(x: i64) -> i64 {
    (x + 1).div_euclid(2)
}

/// All families of fractions with numerator `n` and odd positive denominator
/// whose odd greedy expansion has length 2, one per odd `r < 2n`, ordered by
/// `r`. With `reduced_only`, keeps only `r` coprime to `n`, which restricts
/// the output to the families of reduced fractions.
pub fn length2_families(
    n: &BigInt,
    reduced_only: bool,
) -> Result<Vec<(Length2Witness, AffineFamily)>, Error> {
    if !num_traits::Signed::is_positive(n) || n.is_odd() {
        return Err(Error::NotEvenPositive(n.clone()));
    }
    let two_n = 2 * n;
    let mut out = Vec::new();
    let mut r = BigInt::one();
    while r < two_n {
        if reduced_only && !r.gcd(n).is_one() {
            r += 2;
            continue;
        }
        let mut modulus = BigInt::one();
        let mut exponents = Vec::new();
        for pp in factorize(&r)? {
            let e = pp.exponent() as i64;
            let a = if reduced_only {
                ceil_half(e)
            } else {
                ceil_half(e - vp(pp.prime(), n)? as i64).max(0)
            };
            let a = a as u32;
            modulus *= pp.prime().pow(a);
            exponents.push(PrimePower::new(pp.prime().clone(), a)?);
        }
        let den_const = n * &modulus - &r;
        let den_coeff = 2 * n * &modulus;
        let family = AffineFamily::new(n.clone(), 0, den_const, den_coeff, "t");
        let witness = Length2Witness { r: OddInt::new(r.clone())?, exponents };
        out.push((witness, family));
        r += 2;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::{odd_greedy_expand, StepCap};

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn rs(families: &[(Length2Witness, AffineFamily)]) -> Vec<BigInt> {
        families.iter().map(|(w, _)| w.r.value().clone()).collect()
    }

    #[test]
    fn numerator_two_reduced() {
        let fams = length2_families(&big(2), true).unwrap();
        assert_eq!(rs(&fams), vec![big(1), big(3)]);
        let (_, fam) = &fams[0];
        assert_eq!(fam, &AffineFamily::new(2, 0, 1, 4, "t"));
    }

    #[test]
    fn numerator_six_reduced() {
        let fams = length2_families(&big(6), true).unwrap();
        assert_eq!(rs(&fams), vec![big(1), big(5), big(7), big(11)]);
        let (w, fam) = &fams[1];
        assert_eq!(w.r.value(), &big(5));
        assert_eq!(w.modulus(), big(5));
        assert_eq!(w.exponents.len(), 1);
        assert_eq!(w.exponents[0].exponent(), 1);
        assert_eq!(fam, &AffineFamily::new(6, 0, 25, 60, "t"));
    }

    #[test]
    fn unreduced_families_keep_shared_offsets() {
        let fams = length2_families(&big(6), false).unwrap();
        assert_eq!(rs(&fams), vec![big(1), big(3), big(5), big(7), big(9), big(11)]);
        // r = 3 shares a factor with 6, and v_3(3) <= v_3(6) clamps the
        // exponent to zero.
        let (w, fam) = &fams[1];
        assert_eq!(w.modulus(), big(1));
        assert_eq!(fam, &AffineFamily::new(6, 0, 3, 12, "t"));
        // r = 9 exceeds the valuation of 6 at 3, so one factor of 3 remains.
        let (w, fam) = &fams[4];
        assert_eq!(w.modulus(), big(3));
        assert_eq!(fam, &AffineFamily::new(6, 0, 9, 36, "t"));
    }

    #[test]
    fn odd_or_nonpositive_numerators_rejected() {
        assert!(matches!(length2_families(&big(7), true), Err(Error::NotEvenPositive(_))));
        assert!(matches!(length2_families(&big(0), true), Err(Error::NotEvenPositive(_))));
        assert!(matches!(length2_families(&big(-2), true), Err(Error::NotEvenPositive(_))));
    }

    #[test]
    fn family_members_expand_in_exactly_two_steps() {
        let cap = StepCap::default();
        for reduced in [false, true] {
            for n in [2i64, 6, 10] {
                for (_, fam) in length2_families(&big(n), reduced).unwrap() {
                    for t in 0..20 {
                        let e = odd_greedy_expand(&fam.member(t), cap).unwrap();
                        assert!(e.is_terminated(), "{fam} at t={t} did not terminate");
                        assert_eq!(e.len(), 2, "{fam} at t={t} has length {}", e.len());
                    }
                }
            }
        }
    }
}
