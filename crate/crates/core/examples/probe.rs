use odd_greedy::*;
use num_bigint::BigInt;
use std::io::Write;
use std::time::Instant;
fn main() {
    let mut r = Fraction::new(2, 1223).unwrap();
    let t0 = Instant::now();
    for step in 1..=64 {
        if r.is_zero() { eprintln!("terminated after {} steps", step - 1); break; }
        let x = odd_greedy_step(&r).unwrap();
        let digits = x.value().to_string().len();
        eprintln!("step {step}: x has {digits} digits, num={}, elapsed={:?}", r.num(), t0.elapsed());
        std::io::stderr().flush().unwrap();
        let unit = Fraction::new(BigInt::from(1), x.value().clone()).unwrap();
        r = (&r - &unit).reduced();
    }
}
