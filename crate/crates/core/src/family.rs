//! One-parameter families of rationals of the shape `(A + Bt) / (C + Dt)`
//! for nonnegative integer `t`, the common currency of the family
//! generators.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::fraction::Fraction;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineFamily {
    num_const: BigInt,
    num_coeff: BigInt,
    den_const: BigInt,
    den_coeff: BigInt,
    param_name: &'static str,
}

impl AffineFamily {
    pub fn new(
        num_const: impl Into<BigInt>,
        num_coeff: impl Into<BigInt>,
        den_const: impl Into<BigInt>,
        den_coeff: impl Into<BigInt>,
        param_name: &'static str,
    ) -> Self {
        let fam = AffineFamily {
            num_const: num_const.into(),
            num_coeff: num_coeff.into(),
            den_const: den_const.into(),
            den_coeff: den_coeff.into(),
            param_name,
        };
        debug_assert!(fam.num_const.is_positive());
        debug_assert!(fam.den_const.is_positive());
        debug_assert!(!fam.num_coeff.is_negative());
        debug_assert!(fam.den_coeff.is_positive());
        fam
    }

    pub fn num_const(&self) -> &BigInt {
        &self.num_const
    }

    pub fn num_coeff(&self) -> &BigInt {
        &self.num_coeff
    }

    pub fn den_const(&self) -> &BigInt {
        &self.den_const
    }

    pub fn den_coeff(&self) -> &BigInt {
        &self.den_coeff
    }

    pub fn param_name(&self) -> &'static str {
        self.param_name
    }

    /// The member at parameter `t`, unreduced.
    pub fn member(&self, t: u64) -> Fraction {
        let num = &self.num_const + &self.num_coeff * t;
        let den = &self.den_const + &self.den_coeff * t;
        Fraction::new(num, den).expect("family denominators are positive")
    }

    /// The parameter `t >= 0` with `C + Dt = d`, if there is one.
    pub fn denominator_param(&self, d: &BigInt) -> Option<BigInt> {
        let diff = d - &self.den_const;
        if diff.is_negative() {
            return None;
        }
        let (t, rem) = diff.div_rem(&self.den_coeff);
        rem.is_zero().then_some(t)
    }
}

fn write_affine(f: &mut fmt::Formatter<'_>, c: &BigInt, coeff: &BigInt, param: &str) -> fmt::Result {
    if coeff.is_zero() {
        return write!(f, "{c}");
    }
    write!(f, "({c}+{coeff}{param})")
}

impl fmt::Display for AffineFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_affine(f, &self.num_const, &self.num_coeff, self.param_name)?;
        write!(f, "/")?;
        write_affine(f, &self.den_const, &self.den_coeff, self.param_name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn member_substitutes_the_parameter() {
        let fam = AffineFamily::new(2, 0, 1, 4, "t");
        assert_eq!(fam.member(1), Fraction::new(2, 5).unwrap());
        let fam = AffineFamily::new(6, 0, 25, 60, "t");
        let m = fam.member(0);
        assert_eq!(m.num(), &BigInt::from(6));
        assert_eq!(m.den(), &BigInt::from(25));
        let fam = AffineFamily::new(87, 16, 135, 30, "t");
        let m = fam.member(1);
        assert_eq!(m.num(), &BigInt::from(103));
        assert_eq!(m.den(), &BigInt::from(165));
    }

    #[test]
    fn display_matches_family_notation() {
        assert_eq!(AffineFamily::new(6, 0, 25, 60, "t").to_string(), "6/(25+60t)");
        assert_eq!(AffineFamily::new(87, 16, 135, 30, "t").to_string(), "(87+16t)/(135+30t)");
        assert_eq!(AffineFamily::new(14, 2, 45, 10, "u").to_string(), "(14+2u)/(45+10u)");
    }

    #[test]
    fn denominator_param_inverts_membership() {
        let fam = AffineFamily::new(6, 0, 25, 60, "t");
        assert_eq!(fam.denominator_param(&BigInt::from(25)), Some(BigInt::zero()));
        assert_eq!(fam.denominator_param(&BigInt::from(145)), Some(BigInt::from(2)));
        assert_eq!(fam.denominator_param(&BigInt::from(26)), None);
        assert_eq!(fam.denominator_param(&BigInt::from(5)), None);
    }
}
