//! Reference catalog of closed-form integral values.
//!
//! Nine groups: groups 1–4 list J(m,p,q) for m = −2,−1,0,1 and 2 ≤ p,q ≤ 4;
//! groups 5–9 list the K family at total weights p+q+r = 3,…,7.
//!
//! Each row records the integrand as displayed in the catalog together with
//! the value of that displayed integrand. Displayed integrands write Li₁(x)
//! as log(1−x) and Li₀(x)/x as 1/(1−x); since Li₁(x) = −log(1−x), the value
//! of the spec-oriented integral flips sign once per Li₁ factor
//! ([`TableRow::expected`]).
//!
//! Two rows differ from their commonly circulated variants, in both cases by
//! a sign forced by the recurrences and confirmed by quadrature:
//! group 3 row 4 carries +(15/2)ζ(4) (not −), and group 8 row 8 is
//! +18ζ(2)ζ(5) − 30ζ(7) (not its negative).

use crate::expr::{Generator, ZetaExpr};
use crate::rational::{rat, rat_i, Rational};
use crate::reduce::IntegralSpec;

/// One catalog row: a spec, its displayed integrand, and the displayed value.
#[derive(Clone, Debug)]
pub struct TableRow {
    /// Catalog group, 1–9.
    pub table: u8,
    /// Row within the group, 1-based.
    pub row: u8,
    /// The integrand as displayed (log(1−x) and 1/(1−x) orientation).
    pub integrand: &'static str,
    pub spec: IntegralSpec,
    /// Number of Li₁ factors written as log(1−x) in `integrand`.
    pub li1_factors: u32,
    /// Exact value of the displayed integrand.
    pub displayed_value: ZetaExpr,
}

impl TableRow {
    /// Value of `spec` itself: the displayed value times (−1)^{Li₁ factors}.
    pub fn expected(&self) -> ZetaExpr {
        if self.li1_factors % 2 == 0 {
            self.displayed_value.clone()
        } else {
            -self.displayed_value.clone()
        }
    }
}

fn z(n: u32) -> ZetaExpr {
    ZetaExpr::zeta(n)
}

fn zz(a: u32, b: u32) -> ZetaExpr {
    ZetaExpr::term(rat_i(1), vec![Generator::zeta(a), Generator::zeta(b)])
}

fn n(v: i64) -> ZetaExpr {
    ZetaExpr::from_int(v)
}

fn f(num: i64, den: i64) -> Rational {
    rat(num, den)
}

fn row(
    table: u8,
    row: u8,
    integrand: &'static str,
    spec: IntegralSpec,
    li1_factors: u32,
    displayed_value: ZetaExpr,
) -> TableRow {
    TableRow { table, row, integrand, spec, li1_factors, displayed_value }
}

/// All 57 catalog rows.
pub fn all_rows() -> Vec<TableRow> {
    let j = |m, p, q| IntegralSpec::j(m, p, q).expect("catalog J spec");
    let k = |r, p, q| IntegralSpec::k(r, p, q).expect("catalog K spec");
    let kp = |r, q| ZetaExpr::kappa(r, q);

    vec![
        // Group 1: J(−2,p,q) = ∫ Li_p Li_q / x².
        row(
            1,
            1,
            "Li_2(x)^2 / x^2",
            j(-2, 2, 2),
            0,
            z(2).scale_int(4) - z(3).scale_int(2) - z(4).scale(&f(5, 2)),
        ),
        row(
            1,
            2,
            "Li_2(x) Li_3(x) / x^2",
            j(-2, 2, 3),
            0,
            z(2).scale_int(6) - z(3).scale_int(3) - z(4).scale(&f(11, 4)) - zz(2, 3),
        ),
        row(
            1,
            3,
            "Li_2(x) Li_4(x) / x^2",
            j(-2, 2, 4),
            0,
            z(2).scale_int(8)
                - z(3).scale_int(4)
                - z(4).scale_int(3)
                - z(5).scale_int(2)
                - z(6).scale(&f(7, 4)),
        ),
        row(
            1,
            4,
            "Li_3(x)^2 / x^2",
            j(-2, 3, 3),
            0,
            z(2).scale_int(12)
                - z(3).scale_int(6)
                - z(4).scale(&f(11, 2))
                - zz(2, 3).scale_int(2)
                - zz(3, 3),
        ),
        row(
            1,
            5,
            "Li_3(x) Li_4(x) / x^2",
            j(-2, 3, 4),
            0,
            z(2).scale_int(20)
                - z(3).scale_int(10)
                - z(4).scale(&f(17, 2))
                - z(5).scale_int(2)
                - zz(2, 3).scale_int(2)
                - z(6).scale(&f(7, 4))
                - zz(3, 3)
                - zz(3, 4),
        ),
        row(
            1,
            6,
            "Li_4(x)^2 / x^2",
            j(-2, 4, 4),
            0,
            z(2).scale_int(40)
                - z(3).scale_int(20)
                - z(4).scale_int(17)
                - z(5).scale_int(4)
                - zz(2, 3).scale_int(4)
                - z(6).scale(&f(7, 2))
                - zz(3, 3).scale_int(2)
                - zz(3, 4).scale_int(2)
                - z(8).scale(&f(7, 6)),
        ),
        // Group 2: J(−1,p,q) = ∫ Li_p Li_q / x.
        row(2, 1, "Li_2(x)^2 / x", j(-1, 2, 2), 0, zz(2, 3).scale_int(2) - z(5).scale_int(3)),
        row(2, 2, "Li_2(x) Li_3(x) / x", j(-1, 2, 3), 0, zz(3, 3).scale(&f(1, 2))),
        row(
            2,
            3,
            "Li_2(x) Li_4(x) / x",
            j(-1, 2, 4),
            0,
            zz(2, 5).scale_int(2) + zz(3, 4) - z(7).scale_int(4),
        ),
        row(2, 4, "Li_3(x)^2 / x", j(-1, 3, 3), 0, z(7).scale_int(4) - zz(2, 5).scale_int(2)),
        row(2, 5, "Li_3(x) Li_4(x) / x", j(-1, 3, 4), 0, z(8).scale(&f(7, 12))),
        row(
            2,
            6,
            "Li_4(x)^2 / x",
            j(-1, 4, 4),
            0,
            zz(4, 5).scale_int(2) + zz(2, 7).scale_int(2) - z(9).scale_int(5),
        ),
        // Group 3: J(0,p,q) = ∫ Li_p Li_q.
        row(
            3,
            1,
            "Li_2(x)^2",
            j(0, 2, 2),
            0,
            n(6) - z(2).scale_int(2) - z(3).scale_int(4) + z(4).scale(&f(5, 2)),
        ),
        row(
            3,
            2,
            "Li_2(x) Li_3(x)",
            j(0, 2, 3),
            0,
            n(-10) + z(2).scale_int(4) + z(3).scale_int(5) - z(4).scale(&f(15, 4)) + zz(2, 3),
        ),
        row(
            3,
            3,
            "Li_2(x) Li_4(x)",
            j(0, 2, 4),
            0,
            n(15) - z(2).scale_int(7) - z(3).scale_int(5) + z(4).scale_int(4) - z(5).scale_int(3)
                + z(6).scale(&f(7, 4)),
        ),
        // Sign of the ζ(4) term corrected (+15/2, forced by the recurrence).
        row(
            3,
            4,
            "Li_3(x)^2",
            j(0, 3, 3),
            0,
            n(20) - z(2).scale_int(8) - z(3).scale_int(10) + z(4).scale(&f(15, 2))
                - zz(2, 3).scale_int(2)
                + zz(3, 3),
        ),
        row(
            3,
            5,
            "Li_3(x) Li_4(x)",
            j(0, 3, 4),
            0,
            n(-35) + z(2).scale_int(15) + z(3).scale_int(15) - z(4).scale(&f(23, 2))
                + z(5).scale_int(3)
                + zz(2, 3).scale_int(2)
                - zz(3, 3)
                - z(6).scale(&f(7, 4))
                + zz(3, 4),
        ),
        row(
            3,
            6,
            "Li_4(x)^2",
            j(0, 4, 4),
            0,
            n(70) - z(2).scale_int(30) - z(3).scale_int(30) + z(4).scale_int(23)
                - z(5).scale_int(6)
                - zz(2, 3).scale_int(4)
                + z(6).scale(&f(7, 2))
                + zz(3, 3).scale_int(2)
                - zz(3, 4).scale_int(2)
                + z(8).scale(&f(7, 6)),
        ),
        // Group 4: J(1,p,q) = ∫ x Li_p Li_q.
        row(
            4,
            1,
            "x Li_2(x)^2",
            j(1, 2, 2),
            0,
            ZetaExpr::from_rational(f(25, 16)) - z(2).scale(&f(3, 4)) - z(3) + z(4).scale(&f(5, 4)),
        ),
        row(
            4,
            2,
            "x Li_2(x) Li_3(x)",
            j(1, 2, 3),
            0,
            ZetaExpr::from_rational(f(-47, 32)) + z(2).scale(&f(7, 8)) + z(3).scale(&f(3, 8))
                - z(4).scale(&f(15, 16))
                + zz(2, 3).scale(&f(1, 2)),
        ),
        row(
            4,
            3,
            "x Li_2(x) Li_4(x)",
            j(1, 2, 4),
            0,
            ZetaExpr::from_rational(f(173, 128)) - z(2).scale(&f(31, 32))
                + z(3).scale(&f(3, 16))
                + z(4).scale(&f(1, 4))
                - z(5).scale(&f(3, 4))
                + z(6).scale(&f(7, 8)),
        ),
        row(
            4,
            4,
            "x Li_3(x)^2",
            j(1, 3, 3),
            0,
            ZetaExpr::from_rational(f(47, 32)) - z(2).scale(&f(7, 8)) - z(3).scale(&f(3, 8))
                + z(4).scale(&f(15, 16))
                - zz(2, 3).scale(&f(1, 2))
                + zz(3, 3).scale(&f(1, 2)),
        ),
        row(
            4,
            5,
            "x Li_3(x) Li_4(x)",
            j(1, 3, 4),
            0,
            ZetaExpr::from_rational(f(-361, 256)) + z(2).scale(&f(59, 64)) + z(3).scale(&f(3, 32))
                - z(4).scale(&f(19, 32))
                + zz(2, 3).scale(&f(1, 4))
                + z(5).scale(&f(3, 8))
                - z(6).scale(&f(7, 16))
                - zz(3, 3).scale(&f(1, 4))
                + zz(3, 4).scale(&f(1, 2)),
        ),
        row(
            4,
            6,
            "x Li_4(x)^2",
            j(1, 4, 4),
            0,
            ZetaExpr::from_rational(f(361, 256)) - z(2).scale(&f(59, 64)) - z(3).scale(&f(3, 32))
                + z(4).scale(&f(19, 32))
                - zz(2, 3).scale(&f(1, 4))
                - z(5).scale(&f(3, 8))
                + z(6).scale(&f(7, 16))
                + zz(3, 3).scale(&f(1, 4))
                - zz(3, 4).scale(&f(1, 2))
                + z(8).scale(&f(7, 12)),
        ),
        // Group 5: K at weight 3.
        row(5, 1, "log(x) log(1-x)^2 / x", k(1, 1, 1), 2, z(4).scale(&f(-1, 2))),
        row(5, 2, "log(x) Li_2(x) / (1-x)", k(1, 0, 2), 0, z(4).scale(&f(-3, 4))),
        row(5, 3, "log(x)^2 log(1-x) / (1-x)", k(2, 0, 1), 1, z(4).scale(&f(-1, 2))),
        // Group 6: K at weight 4.
        row(
            6,
            1,
            "log(x) Li_3(x) / (1-x)",
            k(1, 0, 3),
            0,
            zz(2, 3).scale_int(2) - z(5).scale(&f(9, 2)),
        ),
        row(6, 2, "log(x) log(1-x) Li_2(x) / x", k(1, 1, 2), 1, zz(2, 3) - z(5).scale(&f(3, 2))),
        row(
            6,
            3,
            "log(x)^2 Li_2(x) / (1-x)",
            k(2, 0, 2),
            0,
            zz(2, 3).scale_int(6) - z(5).scale_int(11),
        ),
        row(
            6,
            4,
            "log(x)^2 log(1-x)^2 / x",
            k(2, 1, 1),
            2,
            z(5).scale_int(8) - zz(2, 3).scale_int(4),
        ),
        row(
            6,
            5,
            "log(x)^3 log(1-x) / (1-x)",
            k(3, 0, 1),
            1,
            z(5).scale_int(12) - zz(2, 3).scale_int(6),
        ),
        // Group 7: K at weight 5.
        row(7, 1, "log(x) Li_4(x) / (1-x)", k(1, 0, 4), 0, zz(3, 3) - z(6).scale(&f(25, 12))),
        row(
            7,
            2,
            "log(x) log(1-x) Li_3(x) / x",
            k(1, 1, 3),
            1,
            zz(3, 3).scale(&f(1, 2)) - z(6).scale(&f(1, 3)),
        ),
        row(7, 3, "log(x) Li_2(x)^2 / x", k(1, 2, 2), 0, z(6).scale(&f(-1, 3))),
        row(7, 4, "log(x)^2 Li_3(x) / (1-x)", k(2, 0, 3), 0, zz(3, 3) - z(6)),
        row(7, 5, "log(x)^2 log(1-x) Li_2(x) / x", k(2, 1, 2), 1, z(6).scale(&f(-1, 3))),
        row(
            7,
            6,
            "log(x)^3 Li_2(x) / (1-x)",
            k(3, 0, 2),
            0,
            z(6).scale_int(8) - zz(3, 3).scale_int(6),
        ),
        row(
            7,
            7,
            "log(x)^3 log(1-x)^2 / x",
            k(3, 1, 1),
            2,
            zz(3, 3).scale_int(6) - z(6).scale_int(9),
        ),
        row(
            7,
            8,
            "log(x)^4 log(1-x) / (1-x)",
            k(4, 0, 1),
            1,
            zz(3, 3).scale_int(12) - z(6).scale_int(18),
        ),
        // Group 8: K at weight 6.
        row(
            8,
            1,
            "log(x) Li_5(x) / (1-x)",
            k(1, 0, 5),
            0,
            zz(3, 4).scale_int(2) + zz(2, 5).scale_int(4) - z(7).scale_int(10),
        ),
        row(
            8,
            2,
            "log(x) log(1-x) Li_4(x) / x",
            k(1, 1, 4),
            1,
            zz(3, 4) + zz(2, 5).scale_int(3) - z(7).scale_int(6),
        ),
        row(8, 3, "log(x) Li_2(x) Li_3(x) / x", k(1, 2, 3), 0, zz(2, 5) - z(7).scale_int(2)),
        row(
            8,
            4,
            "log(x)^2 Li_4(x) / (1-x)",
            k(2, 0, 4),
            0,
            zz(3, 4).scale_int(2) + zz(2, 5).scale_int(20) - z(7).scale_int(36),
        ),
        row(
            8,
            5,
            "log(x)^2 log(1-x) Li_3(x) / x",
            k(2, 1, 3),
            1,
            zz(2, 5).scale_int(14) - z(7).scale_int(24),
        ),
        row(
            8,
            6,
            "log(x)^2 Li_2(x)^2 / x",
            k(2, 2, 2),
            0,
            zz(2, 5).scale_int(12) - z(7).scale_int(20),
        ),
        row(
            8,
            7,
            "log(x)^3 Li_3(x) / (1-x)",
            k(3, 0, 3),
            0,
            zz(2, 5).scale_int(60) - z(7).scale_int(102),
        ),
        // Overall sign corrected (the displayed integrand is positive).
        row(
            8,
            8,
            "log(x)^3 log(1-x) Li_2(x) / x",
            k(3, 1, 2),
            1,
            zz(2, 5).scale_int(18) - z(7).scale_int(30),
        ),
        row(
            8,
            9,
            "log(x)^4 Li_2(x) / (1-x)",
            k(4, 0, 2),
            0,
            zz(2, 5).scale_int(120) + zz(3, 4).scale_int(48) - z(7).scale_int(264),
        ),
        row(
            8,
            10,
            "log(x)^4 log(1-x)^2 / x",
            k(4, 1, 1),
            2,
            z(7).scale_int(144) - zz(2, 5).scale_int(48) - zz(3, 4).scale_int(48),
        ),
        row(
            8,
            11,
            "log(x)^5 log(1-x) / (1-x)",
            k(5, 0, 1),
            1,
            z(7).scale_int(360) - zz(2, 5).scale_int(120) - zz(3, 4).scale_int(120),
        ),
        // Group 9: K(r,0,q) at weight 7; κ₁₆ = K(1,0,6) survives reduction.
        row(9, 1, "log(x) Li_6(x) / (1-x)", k(1, 0, 6), 0, kp(1, 6)),
        row(
            9,
            2,
            "log(x)^2 Li_5(x) / (1-x)",
            k(2, 0, 5),
            0,
            z(8).scale(&f(163, 12)) + kp(1, 6).scale_int(5) - zz(3, 5).scale_int(8),
        ),
        row(9, 3, "log(x)^3 Li_4(x) / (1-x)", k(3, 0, 4), 0, z(8).scale(&f(-1, 2))),
        row(
            9,
            4,
            "log(x)^4 Li_3(x) / (1-x)",
            k(4, 0, 3),
            0,
            zz(3, 5).scale_int(120) - z(8).scale_int(187) - kp(1, 6).scale_int(60),
        ),
        row(
            9,
            5,
            "log(x)^5 Li_2(x) / (1-x)",
            k(5, 0, 2),
            0,
            z(8).scale_int(-80) - kp(1, 6).scale_int(120),
        ),
        row(
            9,
            6,
            "log(x)^6 log(1-x) / (1-x)",
            k(6, 0, 1),
            1,
            zz(3, 5).scale_int(720) - z(8).scale_int(900),
        ),
    ]
}
