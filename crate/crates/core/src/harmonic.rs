//! Exact generalized harmonic numbers.

use crate::rational::{rat_i, Rational};
use num_bigint::BigInt;

/// `H_n^{(r)} = Σ_{k=1}^{n} k^{-r}`, with `H_0^{(r)} = 0`.
pub fn harmonic(n: u32, r: u32) -> Rational {
    assert!(r >= 1, "harmonic order must be >= 1");
    let mut acc = rat_i(0);
    for k in 1..=n as u64 {
        acc += Rational::new(BigInt::from(1), BigInt::from(k).pow(r));
    }
    acc
}
