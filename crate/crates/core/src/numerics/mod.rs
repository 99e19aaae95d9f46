//! Floating-point cross-checks for the exact reduction engine.
//!
//! Everything here evaluates the same objects as the symbolic layer through
//! an independent route: ζ and Li by series ([`polylog`]), the integral
//! families by tanh-sinh quadrature ([`quad`]), and the Euler sums by direct
//! summation with Euler–Maclaurin tails. A reduction is confirmed by
//! comparing [`eval_with_kappas`] of its exact value against
//! [`integrate_spec`] of its defining integral.

pub mod polylog;
pub mod quad;

use crate::expr::{Generator, ZetaExpr};
use crate::rational::to_f64;
use crate::reduce::IntegralSpec;
use crate::sums::EulerSumSpec;
use crate::{Error, Result};

pub use polylog::{li_over_x, ln_stable, polylog as polylog_num, zeta_num};
pub use quad::{tanh_sinh, tanh_sinh_2d, QuadratureConfig};

/// A numeric estimate together with an error bound.
#[derive(Clone, Copy, Debug)]
pub struct NumericValue {
    pub value: f64,
    pub error_bound: f64,
}

/// Euler–Mascheroni constant γ.
const EULER_GAMMA: f64 = 0.577215664901532860606512;

// ------------------------------------------------------- expression values

/// Evaluate an exact expression given numeric values for any κ generators.
///
/// ζ factors are evaluated by [`zeta_num`]; κ factors are looked up in
/// `kappa_env`. If any κ generator has no binding the evaluation fails with
/// [`Error::UnboundKappa`] listing every missing generator.
pub fn eval_expr_num(expr: &ZetaExpr, kappa_env: &[((u32, u32), f64)]) -> Result<f64> {
    let lookup = |r: u32, q: u32| {
        kappa_env.iter().find(|((er, eq), _)| *er == r && *eq == q).map(|(_, v)| *v)
    };
    let mut missing: Vec<(u32, u32)> = Vec::new();
    let mut total = 0.0;
    for (mono, coeff) in expr.terms() {
        let mut prod = to_f64(coeff);
        for factor in mono.factors() {
            match *factor {
                Generator::Zeta(n) => prod *= zeta_num(n),
                Generator::Kappa(r, q) => match lookup(r, q) {
                    Some(v) => prod *= v,
                    None => {
                        if !missing.contains(&(r, q)) {
                            missing.push((r, q));
                        }
                    }
                },
            }
        }
        total += prod;
    }
    if missing.is_empty() {
        Ok(total)
    } else {
        missing.sort_unstable();
        Err(Error::UnboundKappa(missing))
    }
}

/// Evaluate an exact expression, computing any κ generators by quadrature.
///
/// The error bound combines the quadrature bounds of the κ values (propagated
/// linearly through each monomial) with an f64 rounding allowance.
pub fn eval_with_kappas(expr: &ZetaExpr, cfg: &QuadratureConfig) -> Result<NumericValue> {
    let mut env: Vec<((u32, u32), NumericValue)> = Vec::new();
    for (r, q) in expr.kappa_generators() {
        env.push(((r, q), kappa_num(r, q, cfg)?));
    }
    let mut total = 0.0;
    let mut bound = 0.0;
    for (mono, coeff) in expr.terms() {
        let mut prod = to_f64(coeff);
        let mut rel = f64::EPSILON;
        for factor in mono.factors() {
            match *factor {
                Generator::Zeta(n) => {
                    prod *= zeta_num(n);
                    rel += f64::EPSILON;
                }
                Generator::Kappa(r, q) => {
                    let nv = env
                        .iter()
                        .find(|((er, eq), _)| (*er, *eq) == (r, q))
                        .map(|(_, v)| *v)
                        .expect("kappa generators were just computed");
                    prod *= nv.value;
                    rel += if nv.value.abs() > 1e-30 {
                        nv.error_bound / nv.value.abs()
                    } else {
                        nv.error_bound
                    };
                }
            }
        }
        total += prod;
        bound += prod.abs() * rel;
    }
    Ok(NumericValue { value: total, error_bound: bound + 4.0 * f64::EPSILON * total.abs() })
}

// ------------------------------------------------------------- quadrature

/// Numeric value of an integral spec by tanh-sinh quadrature.
///
/// Every family is evaluated through stable (value, complement) pairs:
/// J as ∫ x^{m+2}·(Li_p/x)(Li_q/x), K with log x = log1p(−(1−x)), the
/// two-dimensional cube integrals with 1−xy = (1−x) + x(1−y).
pub fn integrate_spec(spec: &IntegralSpec, cfg: &QuadratureConfig) -> Result<NumericValue> {
    match spec.canonicalized()? {
        IntegralSpec::J { m, p, q } => {
            tanh_sinh(|x, omx| x.powi(m + 2) * li_over_x(p, x, omx) * li_over_x(q, x, omx), cfg)
        }
        IntegralSpec::J0 { m, q } => tanh_sinh(|x, omx| x.powi(m) * polylog_num(q, x, omx), cfg),
        IntegralSpec::K { r, p, q } => tanh_sinh(
            |x, omx| {
                ln_stable(x, omx).powi(r as i32) * li_over_x(p, x, omx) * li_over_x(q, x, omx) * x
            },
            cfg,
        ),
        IntegralSpec::L { m, r, p } => tanh_sinh(
            |x, omx| x.powi(m + 1) * ln_stable(x, omx).powi(r as i32) * li_over_x(p, x, omx),
            cfg,
        ),
        IntegralSpec::Multi { p, q } => cube_integral_num(p, q, cfg),
    }
}

/// The p-fold cube integral ∫_{[0,1]^p} Li_q(x₁⋯x_p) Π log(1−xᵢ)/(x₁⋯x_p),
/// implemented for p = 1, 2. Unlike the exact layer this accepts any q ≥ 0
/// (q = 0 gives the log-log kernel 1/(1−xy) directly).
pub fn cube_integral_num(p: u32, q: u32, cfg: &QuadratureConfig) -> Result<NumericValue> {
    match p {
        1 => tanh_sinh(|x, omx| li_over_x(q, x, omx) * ln_stable(omx, x), cfg),
        2 => tanh_sinh_2d(
            |x, omx, y, omy| {
                let xy = x * y;
                let omxy = omx + x * omy;
                li_over_x(q, xy, omxy) * ln_stable(omx, x) * ln_stable(omy, y)
            },
            cfg,
        ),
        _ => Err(Error::Domain(format!(
            "cube integral quadrature implemented for p = 1, 2, got p = {p}"
        ))),
    }
}

/// Numeric κ_{r,q} = K(r,0,q)/r! by quadrature.
pub fn kappa_num(r: u32, q: u32, cfg: &QuadratureConfig) -> Result<NumericValue> {
    if r < 1 || q < 2 {
        return Err(Error::Domain(format!("kappa({r},{q}) out of domain: need r >= 1, q >= 2")));
    }
    let spec = IntegralSpec::k(r, 0, q)?;
    let nv = integrate_spec(&spec, cfg)?;
    let fact = to_f64(&crate::rational::Rational::from(crate::rational::factorial(r)));
    Ok(NumericValue { value: nv.value / fact, error_bound: nv.error_bound / fact })
}

// ----------------------------------------------------------- kappa bounds

/// Result of checking |κ_{r,q} − (−1)ʳ ζ(q)(ζ(r+1) − 1)| ≤ (ζ(q−1) − ζ(q))/2^{r+1}.
#[derive(Clone, Copy, Debug)]
pub struct KappaBoundCheck {
    pub r: u32,
    pub q: u32,
    /// Numeric κ_{r,q}.
    pub kappa: NumericValue,
    /// The predicted center (−1)ʳ ζ(q)(ζ(r+1) − 1).
    pub center: f64,
    /// |κ − center|.
    pub deviation: f64,
    /// The bound (ζ(q−1) − ζ(q))/2^{r+1}.
    pub bound: f64,
    /// bound − deviation (positive when the estimate holds with room).
    pub slack: f64,
    pub holds: bool,
}

/// Check the localization estimate for κ_{r,q} (needs r ≥ 1, q ≥ 3).
pub fn kappa_bound_check(r: u32, q: u32, cfg: &QuadratureConfig) -> Result<KappaBoundCheck> {
    if r < 1 || q < 3 {
        return Err(Error::Domain(format!(
            "kappa bound check needs r >= 1, q >= 3, got ({r},{q})"
        )));
    }
    let kappa = kappa_num(r, q, cfg)?;
    let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
    let center = sign * zeta_num(q) * (zeta_num(r + 1) - 1.0);
    let deviation = (kappa.value - center).abs();
    let bound = (zeta_num(q - 1) - zeta_num(q)) / 2f64.powi(r as i32 + 1);
    Ok(KappaBoundCheck {
        r,
        q,
        kappa,
        center,
        deviation,
        bound,
        slack: bound - deviation,
        holds: deviation <= bound + kappa.error_bound,
    })
}

// ------------------------------------------------------------- direct sums

/// Kahan-compensated accumulator.
#[derive(Default)]
struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Direct numeric evaluation of an Euler sum: Σ_{n≥1} (H_n^{(r)})^p / n^q.
///
/// The first 10⁵ terms are summed with compensation; the tail is closed with
/// Euler–Maclaurin expansions of H_n^{(r)} and of the remaining Dirichlet
/// pieces, leaving an error well under 10⁻¹².
pub fn sum_num(spec: &EulerSumSpec) -> f64 {
    const CUTOFF: u32 = 100_000;
    let (r, power, q) = (spec.r(), spec.power(), spec.q());
    let n_f = CUTOFF as f64;
    let mut h = Kahan::default();
    let mut s = Kahan::default();
    for n in 1..=CUTOFF {
        h.add((n as f64).powi(-(r as i32)));
        s.add(h.sum.powi(power as i32) / (n as f64).powi(q as i32));
    }
    let qf = q as f64;
    let tz = |shift: f64| polylog::tail_zeta(qf + shift, n_f);
    let tail = if r >= 2 {
        // H_n^{(r)} = ζ(r) − tail_ζ(r,n); expand the inner tail in n.
        assert!(power == 1, "higher powers only implemented for r = 1");
        let rf = r as f64;
        zeta_num(r) * tz(0.0)
            - (tz(rf - 1.0) / (rf - 1.0) - tz(rf) / 2.0 + rf * tz(rf + 1.0) / 12.0
                - rf * (rf + 1.0) * (rf + 2.0) * tz(rf + 3.0) / 720.0)
    } else {
        // H_n = log n + γ + 1/(2n) − 1/(12n²) + 1/(120n⁴) + O(n⁻⁶).
        let t1 = |shift: f64| polylog::tail_log_zeta(qf + shift, n_f) + EULER_GAMMA * tz(shift);
        match power {
            1 => t1(0.0) + tz(1.0) / 2.0 - tz(2.0) / 12.0 + tz(4.0) / 120.0,
            2 => {
                let t2 = polylog::tail_log2_zeta(qf, n_f)
                    + 2.0 * EULER_GAMMA * polylog::tail_log_zeta(qf, n_f)
                    + EULER_GAMMA * EULER_GAMMA * tz(0.0);
                t2 + t1(1.0) - t1(2.0) / 6.0 + t1(4.0) / 60.0 + tz(2.0) / 4.0 - tz(3.0) / 12.0
                    + (1.0 / 144.0 + 1.0 / 120.0) * tz(4.0)
            }
            _ => unreachable!("spec validation caps the power at 2"),
        }
    };
    s.sum + tail
}

// -------------------------------------------------------------- verification

/// Outcome of checking one reduction against quadrature.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub spec: IntegralSpec,
    /// The exact reduction.
    pub symbolic: ZetaExpr,
    /// The exact reduction evaluated numerically.
    pub symbolic_num: f64,
    /// The integral evaluated by quadrature.
    pub quadrature: f64,
    pub difference: f64,
    /// Combined error bound of both numeric routes.
    pub combined_bound: f64,
}

impl VerifyReport {
    /// True when the two routes agree within `tol` plus the numeric bounds.
    pub fn within(&self, tol: f64) -> bool {
        self.difference <= tol + self.combined_bound
    }
}

/// Reduce a spec exactly, then confirm the value against direct quadrature.
pub fn verify_spec(spec: &IntegralSpec, cfg: &QuadratureConfig) -> Result<VerifyReport> {
    let reduction = crate::reduce::reduce(spec)?;
    let symbolic_num = eval_with_kappas(&reduction.value, cfg)?;
    let quadrature = integrate_spec(spec, cfg)?;
    Ok(VerifyReport {
        spec: spec.canonicalized()?,
        symbolic: reduction.value,
        symbolic_num: symbolic_num.value,
        quadrature: quadrature.value,
        difference: (symbolic_num.value - quadrature.value).abs(),
        combined_bound: symbolic_num.error_bound + quadrature.error_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sums::{linear_sum, quadratic_sum};

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn quad(spec: IntegralSpec) -> f64 {
        integrate_spec(&spec, &cfg()).unwrap().value
    }

    /// Frozen quadrature oracles, computed independently at 30 digits.
    #[test]
    fn integrals_match_frozen_oracles() {
        let cases: Vec<(IntegralSpec, f64)> = vec![
            (IntegralSpec::j(2, 3, 4).unwrap(), 0.2453387424985693314344),
            (IntegralSpec::j(2, 2, 2).unwrap(), 0.398147475997098287029),
            (IntegralSpec::j(-2, 4, 5).unwrap(), 1.055159187867422296134),
            (IntegralSpec::j0(3, 5).unwrap(), 0.2059778573004724541383),
            (IntegralSpec::j0(2, 4).unwrap(), 0.26550227220957689603),
            (IntegralSpec::k(1, 2, 4).unwrap(), -0.2995716534500232470951),
            (IntegralSpec::k(2, 3, 3).unwrap(), 0.272301849507688623314),
            (IntegralSpec::k(4, 2, 2).unwrap(), 0.8080447538844942553082),
            (IntegralSpec::k(3, 1, 2).unwrap(), -0.45172188586645312357),
            (IntegralSpec::l(1, 1, 2).unwrap(), -0.1349670334241132182362),
            (IntegralSpec::l(2, 2, 3).unwrap(), 0.03374090642029018499448),
            (IntegralSpec::l(3, 3, 4).unwrap(), -0.009928159542704662534266),
            (IntegralSpec::l(2, 3, 1).unwrap(), -0.031095681048264761806),
            (IntegralSpec::l(3, 2, 1).unwrap(), 0.025241364138248626815),
            (IntegralSpec::l(0, 2, 1).unwrap(), 0.30601805998435855626),
        ];
        for (spec, want) in cases {
            let got = quad(spec);
            assert!((got - want).abs() < 1e-11, "{spec}: quadrature {got} vs oracle {want}");
        }
    }

    #[test]
    fn kappa_values_match_frozen_oracles() {
        let cases = [
            ((1, 6), -0.65156516371512690455646396209),
            ((3, 4), -0.08367311301649536161489),
            ((2, 5), 0.2046611369650774353325),
            ((1, 8), -0.6465240041546819232451),
            ((3, 6), -0.08264426276194678379797),
        ];
        for ((r, q), want) in cases {
            let got = kappa_num(r, q, &cfg()).unwrap();
            assert!((got.value - want).abs() < 1e-10, "kappa({r},{q}) = {} vs {want}", got.value);
        }
    }

    #[test]
    fn expression_evaluation_binds_kappas() {
        // K(2,0,5) reduces to (163/12)ζ(8) + 5κ(1,6) − 8ζ(3)ζ(5).
        let spec = IntegralSpec::k(2, 0, 5).unwrap();
        let reduction = crate::reduce::reduce(&spec).unwrap();
        match eval_expr_num(&reduction.value, &[]) {
            Err(Error::UnboundKappa(missing)) => assert_eq!(missing, vec![(1, 6)]),
            other => panic!("expected unbound kappa, got {other:?}"),
        }
        let bound = eval_expr_num(&reduction.value, &[((1, 6), -0.65156516371512690456)]).unwrap();
        assert!((bound - 0.409322273930154870665).abs() < 1e-12);
        let auto = eval_with_kappas(&reduction.value, &cfg()).unwrap();
        assert!((auto.value - 0.409322273930154870665).abs() < 1e-9);
    }

    #[test]
    fn verify_reports_agreement() {
        for spec in [
            IntegralSpec::j(0, 2, 2).unwrap(),
            IntegralSpec::j(-1, 3, 3).unwrap(),
            IntegralSpec::k(2, 0, 5).unwrap(),
            IntegralSpec::l(1, 2, 2).unwrap(),
            IntegralSpec::multi(1, 3).unwrap(),
        ] {
            let report = verify_spec(&spec, &cfg()).unwrap();
            assert!(
                report.within(1e-9),
                "{spec}: symbolic {} vs quadrature {} (diff {})",
                report.symbolic_num,
                report.quadrature,
                report.difference
            );
        }
    }

    #[test]
    fn kappa_localization_bound_holds_with_slack() {
        let check = kappa_bound_check(1, 6, &cfg()).unwrap();
        assert!(check.holds);
        assert!(check.slack > 0.0);
        // The bound here is (ζ(5) − ζ(6))/4 ≈ 0.0049.
        assert!((check.bound - 0.00489617).abs() < 1e-7);
        assert!((check.kappa.value + 0.651565).abs() < 1e-5);
    }

    #[test]
    fn direct_sums_match_closed_forms() {
        // S_{3,5} reduces through K(2,0,5), whose value carries κ(1,6).
        let eval = |e: &ZetaExpr| eval_expr_num(e, &[((1, 6), -0.65156516371512690456)]).unwrap();
        // S_{1,2} = 2ζ(3).
        let s12 = sum_num(&EulerSumSpec::new(1, 1, 2).unwrap());
        assert!((s12 - 2.0 * zeta_num(3)).abs() < 5e-12, "{s12}");
        // S_{2,2} = (7/4)ζ(4).
        let s22 = sum_num(&EulerSumSpec::new(2, 1, 2).unwrap());
        assert!((s22 - eval(&linear_sum(2, 2).unwrap())).abs() < 5e-12, "{s22}");
        // S_{3,5} against its closed form.
        let s35 = sum_num(&EulerSumSpec::new(3, 1, 5).unwrap());
        assert!((s35 - eval(&linear_sum(3, 5).unwrap())).abs() < 5e-12, "{s35}");
        // S_{1²,3} = (7/2)ζ(5) − ζ(2)ζ(3).
        let s113 = sum_num(&EulerSumSpec::new(1, 2, 3).unwrap());
        assert!((s113 - eval(&quadratic_sum(3).unwrap())).abs() < 5e-12, "{s113}");
        // S_{1²,5} frozen oracle.
        let s115 = sum_num(&EulerSumSpec::new(1, 2, 5).unwrap());
        assert!((s115 - 1.0918825886645300852).abs() < 5e-12, "{s115}");
    }

    #[test]
    fn cube_integrals_match_their_sums() {
        // p = 2, q = 0: ∫∫ log(1−x)log(1−y)/(1−xy) = S_{1²,2} = (17/4)ζ(4).
        let c20 = cube_integral_num(2, 0, &cfg()).unwrap();
        assert!((c20.value - 4.25 * zeta_num(4)).abs() < 1e-7, "{}", c20.value);
        // p = 1, q = 2: −S_{1,3} = −(5/4)ζ(4).
        let c12 = cube_integral_num(1, 2, &cfg()).unwrap();
        assert!((c12.value + 1.25 * zeta_num(4)).abs() < 1e-10, "{}", c12.value);
        // p = 3 is out of numeric scope.
        assert!(matches!(cube_integral_num(3, 3, &cfg()), Err(Error::Domain(_))));
    }
}
