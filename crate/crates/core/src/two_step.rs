//! Two-parameter families of length-`m` greedy sequences extending a fixed
//! prefix of `m-2` odd denominators.
//!
//! With `x = x_{m-2}`, the second-to-last term is `b + 2*t1` where
//! `b = (x^2+3)/2 - x + 2*c1`, and the last term is
//! `(x_{m-1}^2+3)/2 - x_{m-1} + 2*c2 + 2*t2`. The shifts `c1` and `c2` are
//! chosen minimal so that every term bound from the earlier entries is
//! strictly exceeded; larger shifts give subfamilies. Unlike the
//! one-term-extension families, these do not cover every length-`m`
//! expansion starting with the prefix.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{sum_of_reciprocals, OddInt};
use crate::error::Error;
use crate::fraction::Fraction;
use crate::greedy::{first_greedy_violation, term_lower_bound};

/// Generator of length-`m` greedy sequences `prefix + [b + 2*t1, last(t1, t2)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoStepFamily {
    pub prefix: Vec<OddInt>,
    pub c1: BigInt,
    pub b: OddInt,
    pub c2: BigInt,
}

impl TwoStepFamily {
    /// `x_{m-1} = b + 2*t1`.
    pub fn second_last(&self, t1: u64) -> OddInt {
        OddInt::new(self.b.value() + 2 * BigInt::from(t1)).expect("b + 2*t1 stays odd positive")
    }

    /// `x_m = (x_{m-1}^2 + 3)/2 - x_{m-1} + 2*c2 + 2*t2`.
    pub fn last(&self, t1: u64, t2: u64) -> OddInt {
        let x = self.second_last(t1).into_value();
        let v = (&x * &x + 3) / 2 - x + 2 * &self.c2 + 2 * BigInt::from(t2);
        OddInt::new(v).expect("the last term stays odd positive")
    }

    /// The full denominator tuple and its exact value (unreduced).
    pub fn member(&self, t1: u64, t2: u64) -> (Vec<OddInt>, Fraction) {
        let mut denominators = self.prefix.clone();
        denominators.push(self.second_last(t1));
        denominators.push(self.last(t1, t2));
        let value = sum_of_reciprocals(&denominators);
        (denominators, value)
    }

    /// Coefficients of the last term as a polynomial in `(t1, t2)`:
    /// `(constant, t1, t1^2, t2)`.
    pub fn last_term_poly(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        let b = self.b.value();
        let constant = (b * b + 3) / 2 - b + 2 * &self.c2;
        (constant, 2 * b - 2, BigInt::from(2), BigInt::from(2))
    }
}

/// Smallest nonnegative `c` with `base + 2c` strictly above every bound.
fn minimal_shift(base: &BigInt, bounds: &[Fraction]) -> BigInt {
    let Some(q) = bounds.iter().max() else {
        return BigInt::zero();
    };
    let gap = q - &Fraction::from_integer(base.clone());
    // c > gap / 2, so c = floor(gap / 2) + 1, clamped to 0.
    let c = Fraction::new(gap.num().clone(), 2 * gap.den())
        .expect("doubling keeps the denominator nonzero")
        .floor()
        + BigInt::from(1);
    c.max(BigInt::zero())
}

/// Builds the family for a greedy prefix of length `m - 2 >= 1`, with the
/// minimal admissible shifts `c1` and `c2`.
pub fn two_step_family(prefix: &[OddInt]) -> Result<TwoStepFamily, Error> {
    if prefix.is_empty() {
        return Err(Error::EmptyPrefix);
    }
    if let Some((i, k)) = first_greedy_violation(prefix) {
        return Err(Error::NotGreedy { i, k });
    }
    let m = prefix.len() + 2;
    let x = prefix.last().expect("prefix is nonempty").value();
    let base1 = (x * x + 3) / 2 - x;
    // The c1 condition ranges over i in [m-3] and is vacuous when m = 3.
    let bounds1 = (1..=m - 3)
        .map(|i| term_lower_bound(prefix, i, m - 1))
        .collect::<Result<Vec<_>, _>>()?;
    let c1 = minimal_shift(&base1, &bounds1);
    let b = OddInt::new(base1 + 2 * &c1)?;

    let bv = b.value();
    let base2 = (bv * bv + 3) / 2 - bv;
    let mut with_b = prefix.to_vec();
    with_b.push(b.clone());
    let bounds2 = (1..=m - 2)
        .map(|i| term_lower_bound(&with_b, i, m))
        .collect::<Result<Vec<_>, _>>()?;
    let c2 = minimal_shift(&base2, &bounds2);

    Ok(TwoStepFamily { prefix: prefix.to_vec(), c1, b, c2 })
}

/// Whether the term bound against `i` strictly decreases when the final
/// entry it reads (`x_{k-1}`) grows by `2t`. Requires `i <= k - 2`, `t >= 1`,
/// and a greedy tuple through position `k - 1`.
pub fn bound_decreases(xs: &[OddInt], i: usize, k: usize, t: u64) -> Result<bool, Error> {
    if t == 0 {
        return Err(Error::NotPositive);
    }
    if i < 1 || k < i + 2 || k > xs.len() + 1 {
        return Err(Error::IndexRange { i, k, len: xs.len() });
    }
    if let Some((i, k)) = first_greedy_violation(&xs[..k - 1]) {
        return Err(Error::NotGreedy { i, k });
    }
    let before = term_lower_bound(xs, i, k)?;
    let mut grown = xs[..k - 1].to_vec();
    let last = grown.last_mut().expect("k >= i + 2 >= 3");
    *last = OddInt::new(last.value() + 2 * BigInt::from(t))?;
    let after = term_lower_bound(&grown, i, k)?;
    Ok(before > after)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::is_greedy_sequence;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn odds(xs: &[i64]) -> Vec<OddInt> {
        xs.iter().map(|&x| OddInt::new(x).unwrap()).collect()
    }

    fn odd(x: i64) -> OddInt {
        OddInt::new(x).unwrap()
    }

    #[test]
    fn family_for_prefix_five() {
        let fam = two_step_family(&odds(&[5])).unwrap();
        assert_eq!(fam.c1, big(0));
        assert_eq!(fam.b, odd(9));
        assert_eq!(fam.c2, big(7));
        assert_eq!(fam.second_last(2), odd(13));
        assert_eq!(fam.last(0, 0), odd(47));
        assert_eq!(fam.last(1, 0), odd(65)); // 47 + 16 + 2
        assert_eq!(fam.last(0, 3), odd(53));
        let (c, t1, t1sq, t2) = fam.last_term_poly();
        assert_eq!((c, t1, t1sq, t2), (big(47), big(16), big(2), big(2)));
    }

    #[test]
    fn family_for_prefix_three() {
        let fam = two_step_family(&odds(&[3])).unwrap();
        assert_eq!(fam.b, odd(3));
        assert_eq!(fam.c2, big(1));
        let (c, t1, t1sq, t2) = fam.last_term_poly();
        assert_eq!((c, t1, t1sq, t2), (big(5), big(4), big(2), big(2)));

        let (dens, _) = fam.member(0, 0);
        assert_eq!(dens, odds(&[3, 3, 5]));
        assert!(is_greedy_sequence(&dens).unwrap());
    }

    #[test]
    fn member_values_are_unreduced_sums() {
        let fam = two_step_family(&odds(&[5])).unwrap();
        let (dens, value) = fam.member(0, 0);
        assert_eq!(dens, odds(&[5, 9, 47]));
        assert_eq!(value.num(), &big(703));
        assert_eq!(value.den(), &big(2115));

        // At t1 = 1 the prefix-three family sweeps out (103+16t2)/(165+30t2).
        let fam = two_step_family(&odds(&[3])).unwrap();
        for t2 in 0..6u64 {
            let (_, value) = fam.member(1, t2);
            assert_eq!(value.num(), &(103 + 16 * BigInt::from(t2)));
            assert_eq!(value.den(), &(165 + 30 * BigInt::from(t2)));
        }
    }

    #[test]
    fn empty_and_non_greedy_prefixes_rejected() {
        assert_eq!(two_step_family(&[]), Err(Error::EmptyPrefix));
        assert_eq!(
            two_step_family(&odds(&[5, 9, 45])),
            Err(Error::NotGreedy { i: 1, k: 3 })
        );
    }

    #[test]
    fn longer_prefix_engages_the_c1_condition() {
        // For [3, 5] the second-to-last term must beat the bounds on x_3,
        // i.e. 15/2; the base (5^2+3)/2 - 5 = 9 already does, so c1 = 0.
        let fam = two_step_family(&odds(&[3, 5])).unwrap();
        assert_eq!(fam.c1, big(0));
        assert_eq!(fam.b, odd(9));
        let (dens, _) = fam.member(0, 0);
        assert!(is_greedy_sequence(&dens).unwrap());
    }

    #[test]
    fn bound_decreases_examples() {
        assert!(bound_decreases(&odds(&[5, 9]), 1, 3, 1).unwrap());
        assert!(bound_decreases(&odds(&[3, 5]), 1, 3, 2).unwrap());
        assert!(matches!(
            bound_decreases(&odds(&[3, 5]), 2, 3, 1),
            Err(Error::IndexRange { .. })
        ));
        assert_eq!(bound_decreases(&odds(&[3, 5]), 1, 3, 0), Err(Error::NotPositive));
    }
}
