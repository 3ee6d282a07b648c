//! Brute-force verification scans.
//!
//! Everything here is computed the slow, direct way: expansions come from
//! running the greedy algorithm itself, and GCD valuations from plain
//! integer gcd and repeated division. No family formulas are consulted, so
//! agreement between a scan and a generator is evidence rather than a
//! tautology. Callers plug their claims in as a check closure.
//!
//! Scans are embarrassingly parallel over the input range and merge their
//! per-input outcomes in input order, so results do not depend on how work
//! was partitioned.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::arith::{product, sigma, values, vp, OddInt};
use crate::error::Error;
use crate::fraction::Fraction;
use crate::greedy::{odd_greedy_expand, Expansion, ExpansionStatus, StepCap};
use crate::reduction::prefix_primes;

/// The inputs a length scan covers: every reduced `n/d` with `n` in the
/// numerator range and `d` odd, at most `d_max`, and coprime to `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanWindow {
    pub n_lo: u64,
    pub n_hi: u64,
    pub d_max: u64,
    /// Largest expansion length the window is meant to classify.
    pub max_len: u32,
    pub cap: StepCap,
}

impl ScanWindow {
    pub fn new(n_lo: u64, n_hi: u64, d_max: u64, max_len: u32, cap: StepCap) -> Result<Self, Error> {
        if n_lo == 0 || n_lo > n_hi {
            return Err(Error::InvalidWindow(format!("bad numerator range {n_lo}..={n_hi}")));
        }
        if d_max < 3 {
            return Err(Error::InvalidWindow(format!("d_max must be at least 3, got {d_max}")));
        }
        if max_len == 0 {
            return Err(Error::InvalidWindow("max_len must be at least 1".into()));
        }
        Ok(ScanWindow { n_lo, n_hi, d_max, max_len, cap })
    }
}

/// A claim that failed during a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// `n/d` did not match the expected length classification.
    Length {
        num: u64,
        den: u64,
        expected: String,
        observed: Vec<BigInt>,
        status: ExpansionStatus,
    },
    /// A directly computed GCD valuation escaped its bounds.
    Valuation {
        xm: u64,
        p: BigInt,
        observed: u64,
        lower: u64,
        upper: u64,
    },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Length { num, den, expected, observed, status } => {
                let obs: Vec<String> = observed.iter().map(BigInt::to_string).collect();
                write!(
                    f,
                    "{num}/{den}: expected {expected}; observed [{}] ({status:?})",
                    obs.join(", ")
                )
            }
            Counterexample::Valuation { xm, p, observed, lower, upper } => write!(
                f,
                "x_m = {xm}: v_{p}(gcd) = {observed}, outside [{lower}, {upper}]"
            ),
        }
    }
}

/// Per-prime attainment record from a GCD scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdBoundRecord {
    pub p: BigInt,
    pub lower: u64,
    pub upper: u64,
    /// Smallest scanned `x_m` attaining the lower bound, if any did.
    pub lower_witness: Option<u64>,
    /// Smallest scanned `x_m` attaining the upper bound, if any did.
    pub upper_witness: Option<u64>,
}

/// The outcome of a scan.
#[derive(Debug, Clone)]
pub struct ScanReport {
    /// Number of elementary checks performed (fractions expanded, or
    /// per-prime valuation comparisons).
    pub claims_checked: u64,
    /// Empty unless some claim was falsified.
    pub counterexamples: Vec<Counterexample>,
    /// Terminated expansions tallied by length.
    pub length_counts: BTreeMap<usize, u64>,
    /// Fractions whose terminated length equals the requested hit length.
    pub hits: Vec<(u64, u64)>,
    /// Fractions whose expansion exhausted the step cap.
    pub capped: Vec<(u64, u64)>,
    /// Per-prime records from a GCD scan.
    pub gcd_bounds: Vec<GcdBoundRecord>,
    pub wall_time: Duration,
}

impl ScanReport {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

struct LengthOutcome {
    len: Option<usize>,
    capped: bool,
    hit: bool,
    counterexample: Option<Counterexample>,
}

fn window_pairs(w: &ScanWindow) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for n in w.n_lo..=w.n_hi {
        let mut d = 1;
        while d <= w.d_max {
            if n.gcd(&d) == 1 {
                pairs.push((n, d));
            }
            d += 2;
        }
    }
    pairs
}

/// Expands every fraction in the window and tallies lengths.
pub fn scan_lengths(w: &ScanWindow) -> ScanReport {
    scan_lengths_check(w, None, |_, _, _| None)
}

/// Expands every fraction in the window, applying `check` to each outcome.
/// `check` returns a description of the expected classification when the
/// observed expansion violates it. `hit_length` additionally collects the
/// fractions whose terminated expansion has exactly that length.
pub fn scan_lengths_check<F>(w: &ScanWindow, hit_length: Option<u32>, check: F) -> ScanReport
where
    F: Fn(u64, u64, &Expansion) -> Option<String> + Sync,
{
    let start = Instant::now();
    let pairs = window_pairs(w);
    let outcomes: Vec<LengthOutcome> = pairs
        .par_iter()
        .map(|&(n, d)| {
            let q = Fraction::new(n, d).expect("window denominators are positive");
            let e = odd_greedy_expand(&q, w.cap).expect("window fractions are expandable");
            let len = e.is_terminated().then(|| e.len());
            let hit = match (hit_length, len) {
                (Some(h), Some(len)) => len == h as usize,
                _ => false,
            };
            let counterexample = check(n, d, &e).map(|expected| Counterexample::Length {
                num: n,
                den: d,
                expected,
                observed: values(&e.denominators),
                status: e.status,
            });
            LengthOutcome { len, capped: !e.is_terminated(), hit, counterexample }
        })
        .collect();

    let mut report = ScanReport {
        claims_checked: pairs.len() as u64,
        counterexamples: Vec::new(),
        length_counts: BTreeMap::new(),
        hits: Vec::new(),
        capped: Vec::new(),
        gcd_bounds: Vec::new(),
        wall_time: Duration::ZERO,
    };
    for (&(n, d), outcome) in pairs.iter().zip(outcomes) {
        if let Some(len) = outcome.len {
            *report.length_counts.entry(len).or_insert(0) += 1;
        }
        if outcome.capped {
            report.capped.push((n, d));
        }
        if outcome.hit {
            report.hits.push((n, d));
        }
        if let Some(cex) = outcome.counterexample {
            report.counterexamples.push(cex);
        }
    }
    report.wall_time = start.elapsed();
    report
}

/// For every odd `x_m <= xm_max`, computes `y = gcd(sigma_{m-1}, prod)`
/// directly and checks each prime of the prefix against its valuation
/// bounds, recording whether the extremes are attained.
pub fn scan_gcd_bounds(prefix: &[OddInt], xm_max: u64) -> Result<ScanReport, Error> {
    if prefix.is_empty() {
        return Err(Error::EmptySequence);
    }
    if xm_max == 0 {
        return Err(Error::InvalidWindow("xm_max must be at least 1".into()));
    }
    let start = Instant::now();
    let vals = values(prefix);
    let prod = product(&vals);
    // Bounds from raw valuations of the prefix, nothing else.
    let bounds: Vec<(BigInt, u64, u64)> = prefix_primes(prefix)
        .into_iter()
        .map(|p| {
            let vps: Vec<u64> = vals.iter().map(|x| vp(&p, x).expect("entries positive")).collect();
            let vmax = *vps.iter().max().expect("prefix nonempty");
            let total: u64 = vps.iter().sum();
            (p, total - vmax, total + vmax)
        })
        .collect();

    let xms: Vec<u64> = (1..=xm_max).step_by(2).collect();
    let per_xm: Vec<Vec<(usize, u64, Option<Counterexample>)>> = xms
        .par_iter()
        .map(|&xm| {
            let mut all = vals.clone();
            all.push(BigInt::from(xm));
            let s = sigma(all.len() as i64 - 1, &all);
            let y = s.gcd(&(&prod * xm));
            bounds
                .iter()
                .enumerate()
                .map(|(idx, (p, lower, upper))| {
                    let v = vp(p, &y).expect("gcd of positive integers is positive");
                    let cex = (v < *lower || v > *upper).then(|| Counterexample::Valuation {
                        xm,
                        p: p.clone(),
                        observed: v,
                        lower: *lower,
                        upper: *upper,
                    });
                    (idx, v, cex)
                })
                .collect()
        })
        .collect();

    let mut records: Vec<GcdBoundRecord> = bounds
        .iter()
        .map(|(p, lower, upper)| GcdBoundRecord {
            p: p.clone(),
            lower: *lower,
            upper: *upper,
            lower_witness: None,
            upper_witness: None,
        })
        .collect();
    let mut counterexamples = Vec::new();
    for (&xm, checks) in xms.iter().zip(per_xm) {
        for (idx, v, cex) in checks {
            let rec = &mut records[idx];
            if v == rec.lower && rec.lower_witness.is_none() {
                rec.lower_witness = Some(xm);
            }
            if v == rec.upper && rec.upper_witness.is_none() {
                rec.upper_witness = Some(xm);
            }
            if let Some(cex) = cex {
                counterexamples.push(cex);
            }
        }
    }
    Ok(ScanReport {
        claims_checked: xms.len() as u64 * bounds.len() as u64,
        counterexamples,
        length_counts: BTreeMap::new(),
        hits: Vec::new(),
        capped: Vec::new(),
        gcd_bounds: records,
        wall_time: start.elapsed(),
    })
}
