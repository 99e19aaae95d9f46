//! Euler sums and their integral identities.
//!
//! Notation: H_n^{(r)} = Σ_{j≤n} j^{-r} and
//!
//! * S_{r,q}   = Σ_{n≥1} H_n^{(r)} / n^q   (linear sum, q ≥ 2),
//! * S_{1²,q}  = Σ_{n≥1} (H_n)² / n^q      (quadratic sum, q ≥ 2).
//!
//! Closed forms implemented here:
//!
//! * S_{1,q} = (1 + q/2)ζ(q+1) − ½ Σ_{k=1}^{q−2} ζ(k+1)ζ(q−k) — the classical
//!   symmetric evaluation.
//! * S_{r,q} for r ≥ 2 via the kernel bridge
//!   S_{r,q} = ζ(r)ζ(q) + (−1)^r/(r−1)! · K(r−1,0,q), which trades the sum
//!   for the integral ∫₀¹ log^{r−1}(x) Li_q(x)/(1−x) dx.
//! * S_{1²,s} = S_{2,s} + s·S_{1,s+1} − (s(s+1)/6)ζ(s+2) + ζ(2)ζ(s) − R(s−2)/3,
//!   where R(q) is the residue at 0 of f(z)³/z^{q+2} for the pole series
//!   f(z) = z⁻¹ − ζ(2)z − ζ(3)z² − ⋯ (see [`residue_r`]).
//!
//! The p-fold cube integral
//! ∫_{[0,1]^p} Li_q(x₁⋯x_p) Π log(1−x_i)/x_i dx = (−1)^p S_{1^p, q+p}
//! is captured by [`MultiIntegralIdentity`]; its symbolic value is available
//! for p ∈ {1, 2}.

use crate::expr::ZetaExpr;
use crate::laurent::{laurent_mul_residue, psi_series};
use crate::rational::{factorial, rat, rat_i, Rational};
use crate::reduce::{reduce, IntegralSpec};
use crate::{Error, Result};

/// S_{1,q} = Σ H_n/n^q for q ≥ 2, as a polynomial in zeta values.
pub fn euler_s1(q: u32) -> ZetaExpr {
    assert!(q >= 2, "S_(1,q) requires q >= 2 for convergence, got {q}");
    let mut out = ZetaExpr::zeta(q + 1).scale(&rat(q as i64 + 2, 2));
    for k in 1..=q.saturating_sub(2) {
        out = out - (ZetaExpr::zeta(k + 1) * ZetaExpr::zeta(q - k)).scale(&rat(1, 2));
    }
    out
}

/// R(q): the coefficient of z^{q+1} in f(z)³ for the pole series
/// f(z) = z⁻¹ − ζ(2)z − ζ(3)z² − ⋯. Carries weight q + 4.
pub fn residue_r(q: u32) -> ZetaExpr {
    // f truncated at order q+3 gives a cube trustworthy through z^{q+1}.
    let cube = psi_series(q as i32 + 3).pow(3);
    laurent_mul_residue(&cube, q as i32 + 2)
        .expect("cube of the order-(q+3) pole series reaches z^{q+1}")
}

/// Expresses S_{r,q} (r ≥ 2) through a log–polylog kernel integral:
/// S_{r,q} = `zeta_part` + `coeff` · value(`integral`).
#[derive(Clone, Debug)]
pub struct SumIntegralBridge {
    /// (r, q) of the linear sum being bridged.
    pub sum: (u32, u32),
    /// The ζ(r)ζ(q) boundary part.
    pub zeta_part: ZetaExpr,
    /// (−1)^r / (r−1)!.
    pub coeff: Rational,
    /// K(r−1, 0, q) — the kernel integral the sum reduces to.
    pub integral: IntegralSpec,
}

/// Builds the S_{r,q} ↔ K(r−1,0,q) bridge for r ≥ 2, q ≥ 2.
pub fn sum_to_integral(r: u32, q: u32) -> Result<SumIntegralBridge> {
    if r < 2 || q < 2 {
        return Err(Error::Domain(format!(
            "sum-integral bridge needs r >= 2 and q >= 2, got S_({r},{q})"
        )));
    }
    let sign = if r % 2 == 0 { 1 } else { -1 };
    Ok(SumIntegralBridge {
        sum: (r, q),
        zeta_part: ZetaExpr::zeta(r) * ZetaExpr::zeta(q),
        coeff: Rational::new(sign.into(), factorial(r - 1)),
        integral: IntegralSpec::k(r - 1, 0, q)?,
    })
}

/// S_{r,q} = Σ H_n^{(r)}/n^q for r ≥ 1, q ≥ 2.
pub fn linear_sum(r: u32, q: u32) -> Result<ZetaExpr> {
    if r < 1 || q < 2 {
        return Err(Error::Domain(format!(
            "S_({r},{q}) requires r >= 1 and q >= 2 for convergence"
        )));
    }
    if r == 1 {
        return Ok(euler_s1(q));
    }
    let bridge = sum_to_integral(r, q)?;
    let kernel = reduce(&bridge.integral)?;
    Ok(bridge.zeta_part + kernel.value.scale(&bridge.coeff))
}

/// S_{1²,s} = Σ (H_n)²/n^s for s ≥ 2.
pub fn quadratic_sum(s: u32) -> Result<ZetaExpr> {
    if s < 2 {
        return Err(Error::Domain(format!("S_(1^2,{s}) requires s >= 2 for convergence")));
    }
    let s_i = s as i64;
    let out = linear_sum(2, s)? + euler_s1(s + 1).scale(&rat_i(s_i))
        - ZetaExpr::zeta(s + 2).scale(&rat(s_i * (s_i + 1), 6))
        + ZetaExpr::zeta(2) * ZetaExpr::zeta(s)
        - residue_r(s - 2).scale(&rat(1, 3));
    Ok(out)
}

/// An Euler sum S_{r^p, q}: the p-th power of H^{(r)} summed against n^{-q}.
/// Supported shapes: p = 1 (any r ≥ 1) and p = 2 with r = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EulerSumSpec {
    r: u32,
    p: u32,
    q: u32,
}

impl EulerSumSpec {
    pub fn new(r: u32, p: u32, q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::Domain(format!(
                "Euler sum requires q >= 2 for convergence, got q = {q}"
            )));
        }
        match (r, p) {
            (r, 1) if r >= 1 => Ok(EulerSumSpec { r, p, q }),
            (1, 2) => Ok(EulerSumSpec { r, p, q }),
            _ => Err(Error::Domain(format!(
                "unsupported Euler sum shape S_({r}^{p},{q}): need p = 1 or (r,p) = (1,2)"
            ))),
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn power(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Total weight of the sum's value: p·r + q.
    pub fn weight(&self) -> u32 {
        self.p * self.r + self.q
    }

    pub fn symbolic(&self) -> Result<ZetaExpr> {
        match self.p {
            1 => linear_sum(self.r, self.q),
            2 => quadratic_sum(self.q),
            _ => unreachable!("constructor admits only p in {{1,2}}"),
        }
    }
}

impl std::fmt::Display for EulerSumSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.p == 1 {
            write!(f, "S({},{})", self.r, self.q)
        } else {
            write!(f, "S({}^{},{})", self.r, self.p, self.q)
        }
    }
}

/// The identity Multi(p,q) = (−1)^p · S_{1^p, q+p} between the p-fold cube
/// integral ∫ Li_q(x₁⋯x_p) Π log(1−x_i)/x_i and an Euler sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiIntegralIdentity {
    p: u32,
    q: u32,
}

/// Builds the identity for the cube integral with p ≥ 1 log factors and
/// kernel Li_q, q ≥ max(p, 2).
pub fn multi_integral_identity(p: u32, q: u32) -> Result<MultiIntegralIdentity> {
    if p < 1 || q < 2 || q < p {
        return Err(Error::Domain(format!(
            "cube integral needs p >= 1 and q >= max(p, 2), got Multi({p},{q})"
        )));
    }
    Ok(MultiIntegralIdentity { p, q })
}

impl MultiIntegralIdentity {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// (−1)^p.
    pub fn sign(&self) -> i64 {
        if self.p % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The sum on the other side is S_{1^p, w} with w = q + p.
    pub fn sum_weight(&self) -> u32 {
        self.q + self.p
    }

    /// Closed form, available for p ∈ {1, 2}.
    pub fn symbolic(&self) -> Result<ZetaExpr> {
        let sum = match self.p {
            1 => euler_s1(self.q + 1),
            2 => quadratic_sum(self.q + 2)?,
            _ => {
                return Err(Error::Domain(format!(
                    "no closed form for Multi({},{}): S_(1^{},{}) is not reducible here",
                    self.p,
                    self.q,
                    self.p,
                    self.sum_weight()
                )))
            }
        };
        Ok(sum.scale(&rat_i(self.sign())))
    }
}

impl std::fmt::Display for MultiIntegralIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Multi({},{})", self.p, self.q)
    }
}

/// Value of the double cube integral
/// ∫∫ Li_q(xy) log(1−x) log(1−y)/(xy) dx dy = S_{1², q+2}, for q ≥ 0.
pub fn double_integral_value(q: u32) -> Result<ZetaExpr> {
    quadratic_sum(q + 2)
}
