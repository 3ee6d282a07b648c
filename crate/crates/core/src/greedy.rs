//! The odd greedy expansion engine.
//!
//! Starting from a positive rational with odd reduced denominator, each step
//! takes the largest unit fraction with odd denominator that does not exceed
//! the remainder (the term 1/1 is used whenever the remainder is at least 1,
//! and repeated terms are allowed). Whether this always terminates is open,
//! so every expansion runs under a step cap.
//!
//! [`is_greedy_sequence`] and [`term_lower_bound`] decide, without running
//! the algorithm, whether a given tuple of odd integers arises as the
//! denominators of the odd greedy expansion of the sum of its reciprocals:
//! the tuple does iff `2*sigma_{k-i}(x_i..x_k) > x_i^2 * sigma_{k-i-1}(x_{i+1}..x_k)`
//! for all `i <= k <= m`, iff each `x_k` strictly exceeds an explicit
//! rational bound computed from the terms before it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith::{product, sigma, values, OddInt};
use crate::error::Error;
use crate::fraction::Fraction;

/// Upper bound on the number of expansion steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepCap(u32);

pub const DEFAULT_STEP_CAP: u32 = 64;

impl StepCap {
    pub fn new(max_steps: u32) -> Result<Self, Error> {
        if max_steps == 0 {
            return Err(Error::InvalidCap);
        }
        Ok(StepCap(max_steps))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl Default for StepCap {
    fn default() -> Self {
        StepCap(DEFAULT_STEP_CAP)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionStatus {
    /// The remainder reached exactly zero.
    Terminated,
    /// The step cap was exhausted with a nonzero remainder.
    StepCapReached,
}

/// The result of running the odd greedy algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub denominators: Vec<OddInt>,
    pub status: ExpansionStatus,
    /// Remainder after each step, in reduced form. Populated only by
    /// [`odd_greedy_expand_traced`]; remainders can grow enormously, so they
    /// are not kept by default.
    pub remainders: Option<Vec<Fraction>>,
}

impl Expansion {
    pub fn len(&self) -> usize {
        self.denominators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.denominators.is_empty()
    }

    pub fn is_terminated(&self) -> bool {
        self.status == ExpansionStatus::Terminated
    }
}

/// The denominator the odd greedy algorithm picks for remainder `r`: 1 when
/// `r >= 1`, otherwise the unique odd `x >= 3` with `1/x <= r < 1/(x-2)`.
pub fn odd_greedy_step(r: &Fraction) -> Result<OddInt, Error> {
    if !r.is_positive() {
        return Err(Error::NotPositive);
    }
    let one = Fraction::from_integer(1);
    if *r >= one {
        return OddInt::new(1);
    }
    // Smallest odd x with x >= den/num, via ceiling division.
    let mut x = r.den().div_ceil(r.num());
    if x.is_even() {
        x += 1;
    }
    // Both defining inequalities must hold; anything else is a logic error.
    assert!(r.num() * &x >= *r.den(), "greedy step: 1/x <= r violated");
    assert!(
        r.num() * (&x - 2) < *r.den(),
        "greedy step: r < 1/(x-2) violated"
    );
    OddInt::new(x)
}

fn expand_inner(q: &Fraction, cap: StepCap, trace: bool) -> Result<Expansion, Error> {
    if !q.is_positive() {
        return Err(Error::NotPositive);
    }
    let mut remainder = q.reduced();
    if remainder.den().is_even() {
        return Err(Error::EvenDenominator);
    }
    let mut denominators = Vec::new();
    let mut remainders = trace.then(Vec::new);
    for _ in 0..cap.get() {
        if remainder.is_zero() {
            break;
        }
        let x = odd_greedy_step(&remainder)?;
        let unit = Fraction::new(BigInt::one(), x.value().clone())?;
        remainder = (&remainder - &unit).reduced();
        denominators.push(x);
        if let Some(trace) = remainders.as_mut() {
            trace.push(remainder.clone());
        }
    }
    let status = if remainder.is_zero() {
        ExpansionStatus::Terminated
    } else {
        ExpansionStatus::StepCapReached
    };
    Ok(Expansion { denominators, status, remainders })
}

/// Runs the odd greedy algorithm on `q` until the remainder is zero or the
/// cap is reached. `q` must be positive with an odd reduced denominator.
pub fn odd_greedy_expand(q: &Fraction, cap: StepCap) -> Result<Expansion, Error> {
    expand_inner(q, cap, false)
}

/// Like [`odd_greedy_expand`], additionally recording the remainder after
/// every step.
pub fn odd_greedy_expand_traced(q: &Fraction, cap: StepCap) -> Result<Expansion, Error> {
    expand_inner(q, cap, true)
}

/// First pair `(i, k)` (1-based, `i <= k <= m`) at which the greedy
/// inequality `2*sigma_{k-i}(x_i..x_k) > x_i^2 * sigma_{k-i-1}(x_{i+1}..x_k)`
/// fails, or `None` if the tuple is a greedy sequence.
pub fn first_greedy_violation(xs: &[OddInt]) -> Option<(usize, usize)> {
    let vals = values(xs);
    let m = vals.len();
    for k in 1..=m {
        for i in 1..=k {
            let lhs = 2 * sigma((k - i) as i64, &vals[i - 1..k]);
            let xi = &vals[i - 1];
            let rhs = xi * xi * sigma(k as i64 - i as i64 - 1, &vals[i..k]);
            if lhs <= rhs {
                return Some((i, k));
            }
        }
    }
    None
}

/// Whether `xs` is exactly the denominator sequence of the odd greedy
/// expansion of the sum of its reciprocals.
pub fn is_greedy_sequence(xs: &[OddInt]) -> Result<bool, Error> {
    if xs.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(first_greedy_violation(xs).is_none())
}

/// Exact lower bound that term `k` must strictly exceed for the tuple to
/// remain greedy against term `i`, namely
/// `(x_i-2) * x_i..x_{k-1} / (2*sigma_{k-i-1}(x_i..x_{k-1}) - x_i^2*sigma_{k-i-2}(x_{i+1}..x_{k-1}))`.
///
/// Indices are 1-based with `1 <= i < k <= len+1`; only `x_i..x_{k-1}` are
/// read, so `k = len+1` asks about the next term after the whole slice. The
/// divisor is positive exactly when that prefix is greedy; otherwise this is
/// an error.
pub fn term_lower_bound(xs: &[OddInt], i: usize, k: usize) -> Result<Fraction, Error> {
    if i < 1 || k <= i || k > xs.len() + 1 {
        return Err(Error::IndexRange { i, k, len: xs.len() });
    }
    let vals = values(xs);
    let head = &vals[i - 1..k - 1];
    let tail = &vals[i..k - 1];
    let xi = &vals[i - 1];
    let num = (xi - 2) * product(head);
    let den = 2 * sigma(k as i64 - i as i64 - 1, head) - xi * xi * sigma(k as i64 - i as i64 - 2, tail);
    if !num_traits::Signed::is_positive(&den) {
        return Err(Error::NotGreedy { i, k: k - 1 });
    }
    Fraction::new(num, den)
}
