//! Bernoulli numbers and the rational part of even zeta values.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;

use crate::rational::{binomial, factorial, rat_i, Rational};

static CACHE: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_n` in the `B_1 = -1/2` convention, from the defining
/// recurrence `Σ_{j=0}^{m} C(m+1,j) B_j = 0`. Values are memoized process-wide.
pub fn bernoulli(n: u32) -> Rational {
    let mut cache = CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(rat_i(1));
    }
    while cache.len() <= n as usize {
        let m = cache.len() as u32;
        let mut acc = Rational::from_integer(BigInt::from(0));
        for (j, bj) in cache.iter().enumerate() {
            acc += bj * Rational::from_integer(binomial(m + 1, j as u32));
        }
        let bm = -acc / Rational::from_integer(BigInt::from(m + 1));
        cache.push(bm);
    }
    cache[n as usize].clone()
}

/// The exact rational `ζ(2n) / π^{2n} = (−1)^{n+1} B_{2n} 2^{2n−1} / (2n)!`
/// for `n ≥ 1`.
pub fn even_zeta_over_pi(n: u32) -> Rational {
    assert!(n >= 1, "even_zeta_over_pi requires n >= 1");
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let two_pow = BigInt::one() << (2 * n - 1) as usize;
    bernoulli(2 * n) * Rational::new(sign * two_pow, factorial(2 * n))
}

/// Exact ratio `ζ(2a)·ζ(2b)·… / ζ(2(a+b+…))` for a collapse of even zeta
/// factors: `Π ζ(2aᵢ) = ratio · ζ(2 Σ aᵢ)`.
pub fn even_zeta_collapse_ratio(half_args: &[u32]) -> Rational {
    debug_assert!(half_args.len() >= 2);
    let total: u32 = half_args.iter().sum();
    let mut num = rat_i(1);
    for &a in half_args {
        num *= even_zeta_over_pi(a);
    }
    num / even_zeta_over_pi(total)
}
