//! Truncated Laurent series with [`ZetaExpr`] coefficients.
//!
//! A [`LaurentSeries`] stores the coefficients of z^k for k in
//! `lowest..=trunc`; everything above `trunc` is unknown (truncated), and
//! everything below `lowest` is exactly zero. Multiplication tracks how far
//! the product remains trustworthy:
//!
//! trunc(A·B) = min(A.trunc + B.lowest, B.trunc + A.lowest)
//!
//! since an unknown z^{trunc+1} tail of one factor first contaminates the
//! product at that exponent. Extracting a coefficient beyond `trunc` is an
//! error, never silently zero.
//!
//! The generating series used by the residue computations is
//! ψ-like: z⁻¹ − ζ(2)z − ζ(3)z² − ζ(4)z³ − ⋯ (the z⁰ term vanishes).

use crate::expr::ZetaExpr;
use crate::{Error, Result};

/// Coefficients of z^k for k in `lowest ..= trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    lowest: i32,
    trunc: i32,
    coeffs: Vec<ZetaExpr>,
}

impl LaurentSeries {
    /// `coeffs[i]` is the coefficient of z^(lowest + i); the window must be
    /// nonempty and match the coefficient count.
    pub fn new(lowest: i32, trunc: i32, coeffs: Vec<ZetaExpr>) -> Self {
        assert!(
            trunc >= lowest && coeffs.len() == (trunc - lowest + 1) as usize,
            "window {lowest}..={trunc} needs {} coefficients, got {}",
            trunc - lowest + 1,
            coeffs.len()
        );
        LaurentSeries { lowest, trunc, coeffs }
    }

    pub fn lowest(&self) -> i32 {
        self.lowest
    }

    pub fn trunc(&self) -> i32 {
        self.trunc
    }

    /// Coefficient of z^k. Zero below the window, error above it.
    pub fn coeff(&self, k: i32) -> Result<ZetaExpr> {
        if k > self.trunc {
            return Err(Error::InsufficientTruncation { needed: k, have: self.trunc });
        }
        if k < self.lowest {
            return Ok(ZetaExpr::zero());
        }
        Ok(self.coeffs[(k - self.lowest) as usize].clone())
    }

    pub fn add(&self, other: &LaurentSeries) -> LaurentSeries {
        let lowest = self.lowest.min(other.lowest);
        let trunc = self.trunc.min(other.trunc);
        assert!(trunc >= lowest, "sum window is empty");
        let mut coeffs = Vec::with_capacity((trunc - lowest + 1) as usize);
        for k in lowest..=trunc {
            // Both coeff() calls are within the respective windows or below.
            coeffs.push(self.coeff(k).unwrap() + other.coeff(k).unwrap());
        }
        LaurentSeries::new(lowest, trunc, coeffs)
    }

    pub fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        let lowest = self.lowest + other.lowest;
        let trunc = (self.trunc + other.lowest).min(other.trunc + self.lowest);
        assert!(trunc >= lowest, "product window is empty");
        let mut coeffs = vec![ZetaExpr::zero(); (trunc - lowest + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ka = self.lowest + i as i32;
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = ka + other.lowest + j as i32;
                if k > trunc {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[(k - lowest) as usize] = &coeffs[(k - lowest) as usize] + &(a * b);
            }
        }
        LaurentSeries::new(lowest, trunc, coeffs)
    }

    pub fn pow(&self, n: u32) -> LaurentSeries {
        assert!(n >= 1, "pow requires a positive exponent");
        let mut out = self.clone();
        for _ in 1..n {
            out = out.mul(self);
        }
        out
    }
}

/// The series z⁻¹ − ζ(2)z − ζ(3)z² − ⋯ − ζ(order+1)z^order, windowed on
/// exponents −1..=order (`order` ≥ 0; the z⁰ coefficient is zero).
pub fn psi_series(order: i32) -> LaurentSeries {
    assert!(order >= 0, "psi_series requires order >= 0, got {order}");
    let mut coeffs = Vec::with_capacity((order + 2) as usize);
    coeffs.push(ZetaExpr::one()); // z^{-1}
    coeffs.push(ZetaExpr::zero()); // z^0
    for k in 1..=order {
        coeffs.push(-ZetaExpr::zeta(k as u32 + 1));
    }
    LaurentSeries::new(-1, order, coeffs)
}

/// Residue of `series(z) / z^pole_shift`, i.e. the coefficient of
/// z^{pole_shift − 1} in `series`.
pub fn laurent_mul_residue(series: &LaurentSeries, pole_shift: i32) -> Result<ZetaExpr> {
    series.coeff(pole_shift - 1)
}
