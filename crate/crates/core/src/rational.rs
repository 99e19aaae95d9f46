//! Exact rational scalars.
//!
//! All coefficients in the crate are `BigRational`s: arbitrary-precision and
//! always in canonical form (gcd-reduced, positive denominator), which the
//! `num-rational` representation maintains on every operation.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as an exact rational.
pub fn rat_i(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    acc
}

/// Binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Best-effort conversion to `f64` (numerator/denominator both converted).
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a manual division for extreme magnitudes.
        let n = r
            .numer()
            .to_f64()
            .unwrap_or(f64::INFINITY * r.numer().signum().to_f64().unwrap_or(1.0));
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}
