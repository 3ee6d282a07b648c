//! How the family values reduce: valuations of the symmetric-polynomial
//! numerator, bounds on the GCD canceled from `sigma_{m-1}/prod`, and
//! construction of final terms that attain those bounds.
//!
//! For a prefix `x_1..x_{m-1}` and a prime `p` dividing some entry, write
//! `V_p` for the largest `v_p(x_i)`. The valuation of
//! `y = gcd(sigma_{m-1}(x_1..x_m), x_1..x_m)` always lies in
//! `[v_p(x_1..x_{m-1}) - V_p, v_p(x_1..x_{m-1}) + V_p]`, and both endpoints
//! are reachable by some odd `x_m` exactly when `p` does not divide the
//! weighted sum `sum_i p^{V_p - v_p(x_i)} * prod_{j!=i} x_j / p^{v_p(x_j)}`.
//! Witnesses for all relevant primes at once come from combining per-prime
//! residues with a CRT solve.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, factorize, product, sigma, values, vp, OddInt};
use crate::error::Error;
use crate::family::AffineFamily;

/// Per-prime bounds on the valuation of the canceled GCD.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationBound {
    pub p: BigInt,
    /// Largest `v_p` over the prefix entries.
    pub prefix_max: u64,
    pub lower: u64,
    pub upper: u64,
}

/// A single congruence `x = residue (mod modulus)` with the residue
/// normalized into `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    modulus: BigInt,
    residue: BigInt,
}

impl Congruence {
    pub fn new(residue: impl Into<BigInt>, modulus: impl Into<BigInt>) -> Result<Self, Error> {
        let modulus = modulus.into();
        if !modulus.is_positive() {
            return Err(Error::NotPositive);
        }
        let residue = residue.into().mod_floor(&modulus);
        Ok(Congruence { modulus, residue })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn residue(&self) -> &BigInt {
        &self.residue
    }
}

/// Which end of the valuation bounds a witness should attain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Lower,
    Upper,
}

/// Valuations and unit parts of `vals` with respect to `p`.
struct PrimeSplit {
    vps: Vec<u64>,
    vmax: u64,
    units: Vec<BigInt>,
}

fn prime_split(vals: &[BigInt], p: &BigInt) -> PrimeSplit {
    let vps: Vec<u64> = vals
        .iter()
        .map(|x| vp(p, x).expect("entries are positive"))
        .collect();
    let vmax = vps.iter().copied().max().unwrap_or(0);
    let units: Vec<BigInt> = vals
        .iter()
        .zip(&vps)
        .map(|(x, &v)| x / p.pow(v as u32))
        .collect();
    PrimeSplit { vps, vmax, units }
}

/// `sum_i p^(vmax - v_i) * prod_{j != i} units_j` over the split entries.
fn weighted_unit_sum(p: &BigInt, split: &PrimeSplit) -> BigInt {
    let total: BigInt = split.units.iter().product();
    split
        .vps
        .iter()
        .zip(&split.units)
        .map(|(&v, u)| p.pow((split.vmax - v) as u32) * (&total / u))
        .sum()
}

/// `v_p` of the degree-`m-1` symmetric polynomial of `xs`, computed both by
/// factoring the integer directly and by the valuation formula
/// `v_p(prod) - W_p + v_p(weighted unit sum)`; the two routes must agree.
pub fn sigma_valuation(xs: &[OddInt], p: &BigInt) -> Result<u64, Error> {
    if xs.is_empty() {
        return Err(Error::EmptySequence);
    }
    let vals = values(xs);
    let s = sigma(vals.len() as i64 - 1, &vals);
    let direct = vp(p, &s)?;

    let split = prime_split(&vals, p);
    let vprod: u64 = split.vps.iter().sum();
    let formula = vprod - split.vmax + vp(p, &weighted_unit_sum(p, &split))?;
    assert_eq!(direct, formula, "valuation formula disagrees with direct factoring");
    Ok(direct)
}

/// The two-sided bound on `v_p(gcd(sigma_{m-1}(prefix, x_m), prod * x_m))`,
/// valid for every positive integer `x_m`.
pub fn gcd_valuation_bounds(prefix: &[OddInt], p: &BigInt) -> ValuationBound {
    let vals = values(prefix);
    let split = prime_split(&vals, p);
    let vprod: u64 = split.vps.iter().sum();
    ValuationBound {
        p: p.clone(),
        prefix_max: split.vmax,
        lower: vprod - split.vmax,
        upper: vprod + split.vmax,
    }
}

/// Whether some odd `x_m` attains the valuation bounds at `p`: true iff `p`
/// does not divide the weighted unit sum of the prefix. `p` must divide at
/// least one prefix entry.
pub fn is_attainable(prefix: &[OddInt], p: &BigInt) -> Result<bool, Error> {
    let vals = values(prefix);
    let split = prime_split(&vals, p);
    if split.vmax == 0 {
        return Err(Error::PrimeNotDividing(p.clone()));
    }
    let sum = weighted_unit_sum(p, &split);
    Ok(!(sum % p).is_zero())
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let gcd = a.extended_gcd(modulus);
    gcd.gcd.is_one().then(|| gcd.x.mod_floor(modulus))
}

/// Least positive solution of a system of congruences with pairwise coprime
/// moduli, built by iterated lifting. `force_odd` adds `x = 1 (mod 2)`.
pub fn crt_solve(congruences: &[Congruence], force_odd: bool) -> Result<BigInt, Error> {
    let mut system: Vec<(BigInt, BigInt)> = congruences
        .iter()
        .map(|c| (c.residue.clone(), c.modulus.clone()))
        .collect();
    if force_odd {
        system.push((BigInt::one(), BigInt::from(2)));
    }
    for (i, (_, m)) in system.iter().enumerate() {
        for (_, n) in &system[i + 1..] {
            if !m.gcd(n).is_one() {
                return Err(Error::NonCoprimeModuli);
            }
        }
    }
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for (a, n) in &system {
        // Solve x + modulus * z = a (mod n); the inverse exists by coprimality.
        let inv = mod_inverse(&modulus.mod_floor(n), n).expect("moduli are coprime");
        let z = ((a - &x) * inv).mod_floor(n);
        x += &modulus * z;
        modulus *= n;
    }
    let r = x.mod_floor(&modulus);
    Ok(if r.is_zero() { modulus } else { r })
}

/// Distinct primes dividing at least one entry, ascending.
pub fn prefix_primes(prefix: &[OddInt]) -> Vec<BigInt> {
    let prod = product(&values(prefix));
    factorize(&prod)
        .expect("product of positive integers is positive")
        .into_iter()
        .map(|pp| pp.prime().clone())
        .collect()
}

/// An odd `x_m` for which `v_p(y)` hits the requested end of the bounds at
/// every prime dividing the prefix, built from per-prime residues via CRT:
/// a unit residue `1 (mod p)` for the lower end, and `p^V * x' (mod p^2V)`
/// for the upper end where `x'` solves the unit congruence modulo `p^V`.
/// Fails if any prime fails the attainability criterion.
pub fn extremal_witness(prefix: &[OddInt], which: Extremum) -> Result<OddInt, Error> {
    let vals = values(prefix);
    let primes = prefix_primes(prefix);
    for p in &primes {
        if !is_attainable(prefix, p)? {
            return Err(Error::Unattainable(p.clone()));
        }
    }
    let mut congruences = Vec::with_capacity(primes.len());
    for p in &primes {
        match which {
            Extremum::Lower => congruences.push(Congruence::new(BigInt::one(), p.clone())?),
            Extremum::Upper => {
                let split = prime_split(&vals, p);
                let pv = p.pow(split.vmax as u32);
                let sum = weighted_unit_sum(p, &split).mod_floor(&pv);
                let unit_prod: BigInt = split.units.iter().product::<BigInt>().mod_floor(&pv);
                let inv = mod_inverse(&sum, &pv).expect("attainable sum is a unit");
                let x_unit = (-unit_prod * inv).mod_floor(&pv);
                congruences.push(Congruence::new(&pv * x_unit, &pv * &pv)?);
            }
        }
    }
    let xm = OddInt::new(crt_solve(&congruences, true)?)?;

    // Confirm by direct GCD computation before handing the witness out.
    let mut all = vals.clone();
    all.push(xm.value().clone());
    let s = sigma(all.len() as i64 - 1, &all);
    let y = s.gcd(&product(&all));
    for p in &primes {
        let bound = gcd_valuation_bounds(prefix, p);
        let target = match which {
            Extremum::Lower => bound.lower,
            Extremum::Upper => bound.upper,
        };
        assert_eq!(
            vp(p, &y)?,
            target,
            "witness {xm} misses the {which:?} bound at p = {p}"
        );
    }
    Ok(xm)
}

/// The reduced forms of the values whose expansion has length 2 and starts
/// with `x1`: one family per divisor `y` of `x1^2`, with `K = ceil((x1^2+3)/(4y))`,
/// of the shape `(2K + 2u) / (2*x1*K - x1^2/y + 2*x1*u)`. Members need not
/// be fully reduced for every `(y, u)`, but every reduced form appears.
pub fn reduced_length2_families(x1: &OddInt) -> Vec<(BigInt, AffineFamily)> {
    let x = x1.value();
    let square = x * x;
    divisors(&square)
        .expect("x1^2 is positive")
        .into_iter()
        .map(|y| {
            let k = (&square + BigInt::from(3)).div_ceil(&(4 * &y));
            let num_const = 2 * &k;
            let den_const = 2 * x * &k - &square / &y;
            let family = AffineFamily::new(num_const, 2, den_const, 2 * x, "u");
            (y, family)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn odds(xs: &[i64]) -> Vec<OddInt> {
        xs.iter().map(|&x| OddInt::new(x).unwrap()).collect()
    }

    #[test]
    fn sigma_valuation_examples() {
        assert_eq!(sigma_valuation(&odds(&[3, 9]), &big(3)).unwrap(), 1);
        assert_eq!(sigma_valuation(&odds(&[7, 11]), &big(5)).unwrap(), 0);
        // sigma_2(5, 45, 3) = 375 = 3 * 5^3
        assert_eq!(sigma_valuation(&odds(&[5, 45, 3]), &big(5)).unwrap(), 3);
        assert_eq!(sigma_valuation(&[], &big(3)), Err(Error::EmptySequence));
    }

    #[test]
    fn valuation_drops_to_prefix_product_when_last_term_dominates() {
        // v_p(x_m) > max prefix valuation forces v_p(sigma) = v_p(prefix product).
        let p = big(3);
        for xm in [27i64, 81, 135] {
            let xs = odds(&[3, 9, xm]);
            let expected = vp(&p, &big(27)).unwrap();
            assert_eq!(sigma_valuation(&xs, &p).unwrap(), expected);
        }
    }

    #[test]
    fn gcd_bounds_examples() {
        let b = gcd_valuation_bounds(&odds(&[5]), &big(5));
        assert_eq!((b.lower, b.upper), (0, 2));
        let b = gcd_valuation_bounds(&odds(&[5, 45]), &big(5));
        assert_eq!((b.prefix_max, b.lower, b.upper), (1, 1, 3));
        let b = gcd_valuation_bounds(&odds(&[3]), &big(7));
        assert_eq!((b.lower, b.upper), (0, 0));
    }

    #[test]
    fn attainability_examples() {
        assert!(!is_attainable(&odds(&[5, 45]), &big(5)).unwrap());
        assert!(is_attainable(&odds(&[5, 9]), &big(5)).unwrap());
        assert!(is_attainable(&odds(&[3]), &big(3)).unwrap());
        assert_eq!(
            is_attainable(&odds(&[3]), &big(5)),
            Err(Error::PrimeNotDividing(big(5)))
        );
    }

    #[test]
    fn crt_examples() {
        let sys = vec![
            Congruence::new(2, 3).unwrap(),
            Congruence::new(3, 5).unwrap(),
        ];
        assert_eq!(crt_solve(&sys, false).unwrap(), big(8));

        let sys = vec![Congruence::new(0, 7).unwrap()];
        assert_eq!(crt_solve(&sys, true).unwrap(), big(7));

        assert_eq!(crt_solve(&[], true).unwrap(), big(1));
        assert_eq!(crt_solve(&[], false).unwrap(), big(1));

        let sys = vec![
            Congruence::new(1, 9).unwrap(),
            Congruence::new(2, 3).unwrap(),
        ];
        assert_eq!(crt_solve(&sys, false), Err(Error::NonCoprimeModuli));

        let sys = vec![Congruence::new(1, 4).unwrap()];
        assert_eq!(crt_solve(&sys, true), Err(Error::NonCoprimeModuli));
    }

    #[test]
    fn congruence_normalizes_residues() {
        let c = Congruence::new(-1, 5).unwrap();
        assert_eq!(c.residue(), &big(4));
        assert!(Congruence::new(1, 0).is_err());
    }

    #[test]
    fn witness_construction_verifies_by_direct_gcd() {
        // Internal assertions in extremal_witness recompute the valuations.
        let w = extremal_witness(&odds(&[3]), Extremum::Upper).unwrap();
        assert_eq!(w.value(), &big(15));
        let w = extremal_witness(&odds(&[3]), Extremum::Lower).unwrap();
        assert_eq!(w.value(), &big(1));
        extremal_witness(&odds(&[5, 9]), Extremum::Lower).unwrap();
        extremal_witness(&odds(&[5, 9]), Extremum::Upper).unwrap();
    }

    #[test]
    fn unattainable_prefix_is_reported_with_the_prime() {
        assert_eq!(
            extremal_witness(&odds(&[5, 45]), Extremum::Lower),
            Err(Error::Unattainable(big(5)))
        );
        assert_eq!(
            extremal_witness(&odds(&[5, 45]), Extremum::Upper),
            Err(Error::Unattainable(big(5)))
        );
    }

    #[test]
    fn reduced_forms_for_first_denominator_five() {
        let fams = reduced_length2_families(&OddInt::new(5).unwrap());
        assert_eq!(fams.len(), 3);
        assert_eq!(fams[0], (big(1), AffineFamily::new(14, 2, 45, 10, "u")));
        assert_eq!(fams[1], (big(5), AffineFamily::new(4, 2, 15, 10, "u")));
        assert_eq!(fams[2], (big(25), AffineFamily::new(2, 2, 9, 10, "u")));
    }

    #[test]
    fn prefix_primes_are_distinct_and_sorted() {
        assert_eq!(prefix_primes(&odds(&[5, 45])), vec![big(3), big(5)]);
        assert_eq!(prefix_primes(&odds(&[1])), Vec::<BigInt>::new());
    }
}
