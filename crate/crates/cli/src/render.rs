//! Output formats for exact expressions: plain text, LaTeX, and JSON.
//!
//! All three renderings use the same deterministic term order (the
//! expression's canonical order), so identical invocations produce identical
//! bytes. The JSON schema is
//!
//! ```json
//! {"terms":[{"coeff":"-3/4","mono":[["zeta",4]]}]}
//! ```
//!
//! with coefficients as exact fraction strings and each monomial a list of
//! factors `["zeta", n]` or `["kappa", r, q]` (repeated factors spell out
//! powers). [`expr_from_json`] inverts [`json_expr`] exactly.

use polyzeta_core::expr::Generator;
use polyzeta_core::rational::rat_i;
use polyzeta_core::{Monomial, Rational, ZetaExpr};

/// Output format selector for all commands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

/// Renders an expression in the requested format.
pub fn render_expr(e: &ZetaExpr, format: Format) -> String {
    match format {
        Format::Text => e.to_text(),
        Format::Latex => latex_expr(e),
        Format::Json => json_expr(e).to_string(),
    }
}

/// `\frac{n}{d}` for proper fractions, the bare integer otherwise.
/// Expects a non-negative value; signs are handled by the term joiner.
fn latex_rational(mag: &Rational) -> String {
    let s = mag.to_string();
    match s.split_once('/') {
        Some((n, d)) => format!("\\frac{{{n}}}{{{d}}}"),
        None => s,
    }
}

fn latex_monomial(m: &Monomial) -> String {
    let fs = m.factors();
    let mut out = String::new();
    let mut i = 0;
    while i < fs.len() {
        let mut j = i;
        while j < fs.len() && fs[j] == fs[i] {
            j += 1;
        }
        match fs[i] {
            Generator::Zeta(n) => out.push_str(&format!("\\zeta({n})")),
            Generator::Kappa(r, q) => out.push_str(&format!("\\kappa_{{{r},{q}}}")),
        }
        if j - i > 1 {
            out.push_str(&format!("^{{{}}}", j - i));
        }
        i = j;
    }
    out
}

/// LaTeX rendering, e.g. `\frac{163}{12}\zeta(8)+5\kappa_{1,6}-8\zeta(3)\zeta(5)`.
pub fn latex_expr(e: &ZetaExpr) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (mono, coeff)) in e.ordered_terms().into_iter().enumerate() {
        let neg = coeff < &rat_i(0);
        let mag = if neg { -coeff.clone() } else { coeff.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        if mono.is_unit() {
            out.push_str(&latex_rational(&mag));
        } else {
            if mag != rat_i(1) {
                out.push_str(&latex_rational(&mag));
            }
            out.push_str(&latex_monomial(mono));
        }
    }
    out
}

/// The documented JSON encoding of an expression.
pub fn json_expr(e: &ZetaExpr) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = e
        .ordered_terms()
        .into_iter()
        .map(|(mono, coeff)| {
            let factors: Vec<serde_json::Value> = mono
                .factors()
                .iter()
                .map(|g| match *g {
                    Generator::Zeta(n) => serde_json::json!(["zeta", n]),
                    Generator::Kappa(r, q) => serde_json::json!(["kappa", r, q]),
                })
                .collect();
            serde_json::json!({ "coeff": coeff.to_string(), "mono": factors })
        })
        .collect();
    serde_json::json!({ "terms": terms })
}

/// Decodes the [`json_expr`] schema back into an expression.
pub fn expr_from_json(v: &serde_json::Value) -> Result<ZetaExpr, String> {
    let terms = v
        .get("terms")
        .and_then(|t| t.as_array())
        .ok_or("expected an object with a \"terms\" array")?;
    let mut out = ZetaExpr::zero();
    for term in terms {
        let coeff_str = term
            .get("coeff")
            .and_then(|c| c.as_str())
            .ok_or("term is missing a string \"coeff\"")?;
        let coeff: Rational =
            coeff_str.parse().map_err(|_| format!("invalid rational coefficient '{coeff_str}'"))?;
        let mono = term
            .get("mono")
            .and_then(|m| m.as_array())
            .ok_or("term is missing a \"mono\" array")?;
        let mut factors: Vec<Generator> = Vec::with_capacity(mono.len());
        for f in mono {
            let parts = f.as_array().ok_or("factor must be an array")?;
            let name = parts.first().and_then(|n| n.as_str()).unwrap_or("");
            let int_arg = |i: usize| -> Result<u32, String> {
                parts
                    .get(i)
                    .and_then(|a| a.as_u64())
                    .and_then(|a| u32::try_from(a).ok())
                    .ok_or_else(|| format!("factor argument {i} must be a small integer"))
            };
            match (name, parts.len()) {
                ("zeta", 2) => {
                    let n = int_arg(1)?;
                    if n < 2 {
                        return Err(format!("zeta argument must be >= 2, got {n}"));
                    }
                    factors.push(Generator::zeta(n));
                }
                ("kappa", 3) => {
                    let (r, q) = (int_arg(1)?, int_arg(2)?);
                    if r < 1 || q < 2 || (r + q) % 2 == 0 {
                        return Err(format!("kappa({r},{q}) is not a valid generator"));
                    }
                    factors.push(Generator::kappa(r, q));
                }
                _ => return Err(format!("unrecognized factor {f}")),
            }
        }
        out = out + ZetaExpr::term(coeff, factors);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyzeta_core::rational::rat;
    use polyzeta_core::IntegralSpec;

    fn table9_row2() -> ZetaExpr {
        polyzeta_core::reduce::reduce(&IntegralSpec::k(2, 0, 5).unwrap()).unwrap().value
    }

    #[test]
    fn latex_matches_the_reference_rendering() {
        assert_eq!(
            latex_expr(&table9_row2()),
            "\\frac{163}{12}\\zeta(8)+5\\kappa_{1,6}-8\\zeta(3)\\zeta(5)"
        );
        let single =
            polyzeta_core::reduce::reduce(&IntegralSpec::k(1, 0, 2).unwrap()).unwrap().value;
        assert_eq!(latex_expr(&single), "-\\frac{3}{4}\\zeta(4)");
    }

    #[test]
    fn latex_handles_units_powers_and_constants() {
        assert_eq!(latex_expr(&ZetaExpr::zero()), "0");
        assert_eq!(latex_expr(&ZetaExpr::from_rational(rat(-3, 4))), "-\\frac{3}{4}");
        assert_eq!(latex_expr(&(-ZetaExpr::zeta(3))), "-\\zeta(3)");
        let sq = &ZetaExpr::zeta(3) * &ZetaExpr::zeta(3);
        assert_eq!(latex_expr(&sq), "\\zeta(3)^{2}");
        let shifted = ZetaExpr::from_int(2) - ZetaExpr::zeta(2).scale_int(2);
        assert_eq!(latex_expr(&shifted), "2-2\\zeta(2)");
    }

    #[test]
    fn json_matches_the_documented_schema() {
        let single =
            polyzeta_core::reduce::reduce(&IntegralSpec::k(1, 0, 2).unwrap()).unwrap().value;
        assert_eq!(
            json_expr(&single).to_string(),
            r#"{"terms":[{"coeff":"-3/4","mono":[["zeta",4]]}]}"#
        );
    }

    #[test]
    fn json_round_trips_to_an_equal_expression() {
        let samples = [
            ZetaExpr::zero(),
            ZetaExpr::from_rational(rat(22, 7)),
            table9_row2(),
            ZetaExpr::from_int(2) - ZetaExpr::zeta(2).scale_int(2),
            &ZetaExpr::zeta(3) * &ZetaExpr::zeta(3),
            ZetaExpr::kappa(3, 4).scale(&rat(-1, 6)) + ZetaExpr::zeta(9),
        ];
        for e in samples {
            let v = json_expr(&e);
            assert_eq!(expr_from_json(&v).unwrap(), e, "{v}");
            // Identical invocations produce identical bytes.
            assert_eq!(v.to_string(), json_expr(&e).to_string());
        }
    }

    #[test]
    fn json_decoder_rejects_malformed_input() {
        for bad in [
            r#"{"nope":[]}"#,
            r#"{"terms":[{"coeff":"1/0","mono":[]}]}"#,
            r#"{"terms":[{"coeff":"x","mono":[]}]}"#,
            r#"{"terms":[{"coeff":"1","mono":[["zeta",1]]}]}"#,
            r#"{"terms":[{"coeff":"1","mono":[["kappa",1,5]]}]}"#,
            r#"{"terms":[{"coeff":"1","mono":[["chi",3]]}]}"#,
        ] {
            let v: serde_json::Value = serde_json::from_str(bad).unwrap();
            assert!(expr_from_json(&v).is_err(), "{bad}");
        }
    }
}
