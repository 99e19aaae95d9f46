//! Exact reduction of polylogarithm integrals to zeta values, plus an
//! independent numeric verifier.
//!
//! The integral families handled here are
//!
//! ```text
//! J(m,p,q)  = ∫₀¹ xᵐ Li_p(x) Li_q(x) dx                     m ≥ −2
//! J0(m,q)   = ∫₀¹ xᵐ Li_q(x) dx                             m ≥ 0
//! K(r,p,q)  = ∫₀¹ logʳ(x) Li_p(x) Li_q(x) / x dx            r ≥ 1
//! L(m,r,p)  = ∫₀¹ xᵐ logʳ(x) Li_p(x) dx                     m ≥ −1
//! multi(p,q): the p-fold cube integral equal to (−1)ᵖ S_{1ᵖ,q}
//! ```
//!
//! together with the Euler sums `S_{r,q} = Σ H_n^{(r)}/n^q` and
//! `S_{1²,q} = Σ H_n²/n^q`. Every reducible case comes out as a
//! [`ZetaExpr`]: an exact rational linear combination of monomials in the
//! generators ζ(n) and, for odd weights ≥ 7, the surviving kernel constants
//! κ_{r,q} = K(r,0,q)/r!.
//!
//! The `numerics` module evaluates the same objects in floating point
//! (tanh-sinh quadrature, direct summation, zeta/polylog evaluation) so that
//! every symbolic reduction can be cross-checked against an independent
//! route.

pub mod bernoulli;
pub mod expr;
pub mod harmonic;
pub mod laurent;
pub mod numerics;
pub mod rational;
pub mod reduce;
pub mod sums;
pub mod tables;

pub use expr::{Generator, Monomial, ZetaExpr};
pub use laurent::LaurentSeries;
pub use numerics::{NumericValue, QuadratureConfig, VerifyReport};
pub use rational::Rational;
pub use reduce::{IntegralSpec, ReductionResult};

/// Errors shared by the exact and numeric layers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A parameter fell outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A Laurent-series product was not truncated far enough to expose the
    /// requested coefficient.
    #[error("insufficient truncation: need coefficient of z^{needed}, series only valid through z^{have}")]
    InsufficientTruncation { needed: i32, have: i32 },
    /// The integral diverges and has no finite value to compute.
    #[error("divergent integral: {0}")]
    Divergent(String),
    /// Quadrature stopped before reaching the requested tolerance.
    #[error("tolerance not reached: estimate {value:e} with error bound {bound:e}")]
    ToleranceNotReached { value: f64, bound: f64 },
    /// Numeric evaluation hit κ generators with no supplied value.
    #[error("unbound kappa generators: {}", .0.iter().map(|(r, q)| format!("kappa({r},{q})")).collect::<Vec<_>>().join(", "))]
    UnboundKappa(Vec<(u32, u32)>),
}

pub type Result<T> = std::result::Result<T, Error>;
