//! Floating-point evaluation of ζ(s), Li_p(x), and series tails.
//!
//! ζ(s) uses Euler–Maclaurin at cutoff N = 64 with Bernoulli corrections
//! through B₁₂, accurate to the last f64 bit for all integer s ≥ 2.
//!
//! Li_p(x) on [0,1] uses two branches meeting at x = 1/2:
//!
//!  * x ≤ 1/2 — the defining series Σ xᵏ/kᵖ (geometric convergence);
//!  * x > 1/2 — the expansion around the logarithmic singularity: with
//!    t = −log x,
//!
//!    ```text
//!    Li_p(e^{−t}) = (−t)^{p−1}/(p−1)!·(H_{p−1} − log t)
//!                 + Σ_{k ≥ 0, k ≠ p−1} ζ(p−k)(−t)ᵏ/k!
//!    ```
//!
//!    where ζ at non-positive integers is ζ(0) = −1/2, ζ(−2n) = 0 and
//!    ζ(−n) = −B_{n+1}/(n+1). Both branches take the pair (x, 1−x) so the
//!    caller can hand over an exactly computed complement instead of losing
//!    precision to 1−x cancellation near x = 1.
//!
//! The tail functions return Σ_{n>N} f(n) for f = n^{−s}, log(n)·n^{−s},
//! log²(n)·n^{−s} via the same Euler–Maclaurin device; they back the direct
//! Euler-sum evaluator.

use std::sync::LazyLock;

use crate::bernoulli::bernoulli;
use crate::harmonic::harmonic;
use crate::rational::to_f64;

/// Bernoulli numbers B₀..B₆₄ as f64 (exact rationals rounded once).
static BERN: LazyLock<Vec<f64>> =
    LazyLock::new(|| (0..=64).map(|n| to_f64(&bernoulli(n))).collect());

/// Euler–Maclaurin cutoff for ζ.
const ZETA_CUTOFF: u32 = 64;

/// Largest s cached by [`zeta_num`]; above that ζ(s) ≈ 1 to machine precision
/// and is computed on the fly.
const ZETA_CACHE_MAX: usize = 64;

static ZETA_CACHE: LazyLock<Vec<f64>> = LazyLock::new(|| {
    (0..=ZETA_CACHE_MAX).map(|s| if s < 2 { f64::NAN } else { zeta_em(s as f64) }).collect()
});

fn zeta_em(s: f64) -> f64 {
    let n = ZETA_CUTOFF as f64;
    // k ≤ 64 and 6s ≤ 126 keep kˢ exact in u128, so each term costs one
    // rounding; summing smallest-first with compensation keeps the partial
    // sum within an ulp or two.
    let exact_pow = s == s.trunc() && s <= 21.0;
    let term = |k: u32| -> f64 {
        if exact_pow {
            1.0 / ((k as u128).pow(s as u32) as f64)
        } else {
            (k as f64).powf(-s)
        }
    };
    let mut sum = 0.0;
    let mut carry = 0.0;
    for k in (1..=ZETA_CUTOFF).rev() {
        let y = term(k) - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    sum + tail_zeta(s, n)
}

/// ζ(s) for integer s ≥ 2.
pub fn zeta_num(s: u32) -> f64 {
    assert!(s >= 2, "zeta_num needs s >= 2");
    if (s as usize) <= ZETA_CACHE_MAX {
        ZETA_CACHE[s as usize]
    } else {
        zeta_em(s as f64)
    }
}

/// ζ(m) continued to integers m ≤ 0 (used by the Li log-branch):
/// ζ(0) = −1/2, ζ(−2n) = 0, ζ(−n) = −B_{n+1}/(n+1).
pub(crate) fn zeta_nonpositive(m: i64) -> f64 {
    assert!(m <= 0);
    if m == 0 {
        return -0.5;
    }
    let n = (-m) as usize;
    if n % 2 == 0 {
        0.0
    } else {
        -BERN[n + 1] / ((n + 1) as f64)
    }
}

fn zeta_any(m: i64) -> f64 {
    if m >= 2 {
        zeta_num(m as u32)
    } else {
        assert!(m <= 0, "zeta_any must not be asked for zeta(1)");
        zeta_nonpositive(m)
    }
}

/// Σ_{n>N} n^{−s}: Euler–Maclaurin tail of ζ(s) after the first N terms.
pub fn tail_zeta(s: f64, n: f64) -> f64 {
    // ∫_N^∞ x^{−s} − f(N)/2 − Σ_j B_{2j}/(2j)!·f^{(2j−1)}(N), f = x^{−s}.
    let mut tail = n.powf(1.0 - s) / (s - 1.0) - 0.5 * n.powf(-s);
    let mut deriv = -s * n.powf(-s - 1.0); // f'(N)
    let mut j = 1u32;
    loop {
        let term = -BERN[2 * j as usize] / factorial_f64(2 * j) * deriv;
        tail += term;
        if j >= 6 || term.abs() < 1e-18 * tail.abs() {
            break;
        }
        // advance f^{(2j−1)} → f^{(2j+1)}: two more factors of −(s+i)/N.
        let k = s + (2 * j - 1) as f64;
        deriv *= (k * (k + 1.0)) / (n * n);
        j += 1;
    }
    tail
}

/// Σ_{n>N} log(n)·n^{−s}.
pub fn tail_log_zeta(s: f64, n: f64) -> f64 {
    let ln_n = n.ln();
    let sm1 = s - 1.0;
    let integral = n.powf(-sm1) * (ln_n / sm1 + 1.0 / (sm1 * sm1));
    let f_n = ln_n * n.powf(-s);
    let fp_n = n.powf(-s - 1.0) * (1.0 - s * ln_n);
    let fppp_n =
        n.powf(-s - 3.0) * (3.0 * s * s + 6.0 * s + 2.0 - s * (s + 1.0) * (s + 2.0) * ln_n);
    integral - 0.5 * f_n - BERN[2] / 2.0 * fp_n - BERN[4] / 24.0 * fppp_n
}

/// Σ_{n>N} log²(n)·n^{−s}.
pub fn tail_log2_zeta(s: f64, n: f64) -> f64 {
    let ln_n = n.ln();
    let sm1 = s - 1.0;
    let integral =
        n.powf(-sm1) * (ln_n * ln_n / sm1 + 2.0 * ln_n / (sm1 * sm1) + 2.0 / (sm1 * sm1 * sm1));
    let f_n = ln_n * ln_n * n.powf(-s);
    let fp_n = n.powf(-s - 1.0) * (2.0 * ln_n - s * ln_n * ln_n);
    let fppp_n = n.powf(-s - 3.0)
        * (-s * (s + 1.0) * (s + 2.0) * ln_n * ln_n + (6.0 * s * s + 12.0 * s + 4.0) * ln_n
            - (6.0 * s + 6.0));
    integral - 0.5 * f_n - BERN[2] / 2.0 * fp_n - BERN[4] / 24.0 * fppp_n
}

fn factorial_f64(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product::<f64>().max(1.0)
}

/// log v computed from the stable pair (v, 1−v): uses log1p on whichever
/// side avoids cancellation.
pub fn ln_stable(v: f64, one_minus_v: f64) -> f64 {
    if v < 0.5 {
        v.ln()
    } else {
        (-one_minus_v).ln_1p()
    }
}

/// Li_p(x) for 0 ≤ x ≤ 1 given the stable pair (x, 1−x).
///
/// Li₀(1) and Li₁(1) diverge; for p ≥ 2, Li_p(1) = ζ(p).
pub fn polylog(p: u32, x: f64, omx: f64) -> f64 {
    assert!(p <= 16, "polylog implemented for p <= 16");
    assert!(
        (0.0..=1.0).contains(&x) && (0.0..=1.0).contains(&omx),
        "polylog needs x, 1-x in [0,1]"
    );
    match p {
        0 => x / omx,
        1 => -ln_stable(omx, x),
        _ => {
            if x <= 0.5 {
                polylog_series(p, x)
            } else if omx == 0.0 {
                zeta_num(p)
            } else {
                polylog_log_branch(p, omx)
            }
        }
    }
}

fn polylog_series(p: u32, x: f64) -> f64 {
    let mut pow = x;
    let mut sum = x;
    for k in 2..400u32 {
        pow *= x;
        let term = pow / (k as f64).powi(p as i32);
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    sum
}

fn polylog_log_branch(p: u32, omx: f64) -> f64 {
    let t = -(-omx).ln_1p(); // −log x, computed from 1−x without cancellation
    let h = to_f64(&harmonic(p - 1, 1));
    let mut sum = 0.0;
    let mut pow = 1.0; // (−t)^k / k!
    let mut small_streak = 0u32;
    for k in 0..=(p + 44) {
        if k == p - 1 {
            sum += pow * (h - t.ln());
        } else {
            let term = zeta_any(p as i64 - k as i64) * pow;
            sum += term;
            if k > p {
                // ζ at even negative integers vanishes; require two
                // consecutive negligible terms before stopping.
                if term.abs() < 1e-18 * sum.abs() {
                    small_streak += 1;
                    if small_streak >= 2 {
                        break;
                    }
                } else {
                    small_streak = 0;
                }
            }
        }
        pow *= -t / (k + 1) as f64;
    }
    sum
}

/// Li_p(x)/x, smooth down to x = 0 where the limit is 1 (p ≥ 1).
/// For p = 0 this is 1/(1−x).
pub fn li_over_x(p: u32, x: f64, omx: f64) -> f64 {
    if p == 0 {
        return 1.0 / omx;
    }
    if x == 0.0 {
        return 1.0;
    }
    if x <= 0.5 {
        // Σ x^{k−1}/k^p, leading term 1.
        let mut pow = 1.0;
        let mut sum = 1.0;
        for k in 2..400u32 {
            pow *= x;
            let term = pow / (k as f64).powi(p as i32);
            sum += term;
            if term < 1e-18 * sum {
                break;
            }
        }
        sum
    } else {
        polylog(p, x, omx) / x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ZETA_REF: [(u32, f64); 11] = [
        (2, 1.6449340668482264365),
        (3, 1.2020569031595942854),
        (4, 1.0823232337111381915),
        (5, 1.0369277551433699263),
        (6, 1.0173430619844491397),
        (7, 1.0083492773819228268),
        (8, 1.0040773561979443394),
        (9, 1.0020083928260822144),
        (10, 1.0009945751278180853),
        (11, 1.0004941886041194646),
        (12, 1.0002460865533080483),
    ];

    #[test]
    fn zeta_matches_reference_values() {
        for (s, want) in ZETA_REF {
            assert!(
                (zeta_num(s) - want).abs() < 1e-15 * want,
                "zeta({s}) = {} vs {want}",
                zeta_num(s)
            );
        }
    }

    #[test]
    fn zeta_large_argument_tends_to_one() {
        assert!((zeta_num(80) - 1.0).abs() < 1e-15);
        assert!((zeta_num(30) - 1.0 - 2f64.powi(-30)).abs() < 1e-12);
    }

    #[test]
    fn zeta_at_nonpositive_integers() {
        assert_eq!(zeta_nonpositive(0), -0.5);
        assert!((zeta_nonpositive(-1) + 1.0 / 12.0).abs() < 1e-17);
        assert_eq!(zeta_nonpositive(-2), 0.0);
        assert!((zeta_nonpositive(-3) - 1.0 / 120.0).abs() < 1e-17);
        assert!((zeta_nonpositive(-5) + 1.0 / 252.0).abs() < 1e-17);
    }

    #[test]
    fn dilogarithm_special_points() {
        let ln2 = std::f64::consts::LN_2;
        let want = zeta_num(2) / 2.0 - ln2 * ln2 / 2.0;
        assert!((polylog(2, 0.5, 0.5) - want).abs() < 1e-15);
        // Li₃(1/2) = 7ζ(3)/8 − ζ(2) log(2)/2 + log³(2)/6.
        let want3 = 7.0 * zeta_num(3) / 8.0 - zeta_num(2) * ln2 / 2.0 + ln2.powi(3) / 6.0;
        assert!((polylog(3, 0.5, 0.5) - want3).abs() < 1e-15);
        assert!((polylog(2, 1.0, 0.0) - zeta_num(2)).abs() < 1e-15);
        assert!((polylog(5, 1.0, 0.0) - zeta_num(5)).abs() < 1e-15);
        assert_eq!(polylog(0, 0.25, 0.75), 1.0 / 3.0);
        assert!((polylog(1, 0.75, 0.25) + 0.25f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn log_branch_agrees_with_dilog_reflection() {
        // Li₂(x) + Li₂(1−x) = ζ(2) − log(x)log(1−x): the x side exercises
        // the log branch, the 1−x side the series branch.
        for &x in &[0.6, 0.75, 0.9, 0.99, 0.999] {
            let omx = 1.0 - x;
            let lhs = polylog(2, x, omx) + polylog(2, omx, x);
            let rhs = zeta_num(2) - x.ln() * omx.ln();
            assert!((lhs - rhs).abs() < 1e-14, "x = {x}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn li_over_x_is_smooth_at_zero() {
        assert_eq!(li_over_x(3, 0.0, 1.0), 1.0);
        let x = 1e-8;
        assert!((li_over_x(2, x, 1.0 - x) - (1.0 + x / 4.0)).abs() < 1e-15);
        assert!((li_over_x(0, 0.25, 0.75) - 4.0 / 3.0).abs() < 1e-15);
        // Matches Li_p(x)/x where both are safe.
        let x = 0.8;
        assert!((li_over_x(4, x, 0.2) - polylog(4, x, 0.2) / x).abs() < 1e-15);
    }

    /// Compensated sum of f(n) over n in lo..=hi, largest-n first.
    fn kahan_sum(lo: u64, hi: u64, f: impl Fn(f64) -> f64) -> f64 {
        let (mut sum, mut carry) = (0.0, 0.0);
        for n in (lo..=hi).rev() {
            let y = f(n as f64) - carry;
            let t = sum + y;
            carry = (t - sum) - y;
            sum = t;
        }
        sum
    }

    #[test]
    fn tails_match_partial_sums() {
        let partial = kahan_sum(1, 50, |n| 1.0 / (n * n * n));
        assert!((zeta_num(3) - partial - tail_zeta(3.0, 50.0)).abs() < 5e-16);

        // log tails: brute force the middle range, close with the far tail.
        let brute = kahan_sum(51, 2_000_000, |n| n.ln() / (n * n * n));
        let far = tail_log_zeta(3.0, 2_000_000.0);
        assert!((tail_log_zeta(3.0, 50.0) - brute - far).abs() < 1e-13);

        let brute2 = kahan_sum(51, 2_000_000, |n| n.ln().powi(2) / (n * n * n));
        let far2 = tail_log2_zeta(3.0, 2_000_000.0);
        assert!((tail_log2_zeta(3.0, 50.0) - brute2 - far2).abs() < 1e-13);
    }

    #[test]
    fn ln_stable_uses_the_accurate_side() {
        assert_eq!(ln_stable(1e-300, 1.0), 1e-300f64.ln());
        let omx = 1e-17;
        assert!((ln_stable(1.0 - omx, omx) + omx).abs() < 1e-33);
    }
}
