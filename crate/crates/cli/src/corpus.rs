//! The curves whose Bourbaki degrees realize every value from 0 to 7.

use bourbaki_core::groebner::ModuleVector;
use bourbaki_core::polyring::{parse_polynomial, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusCurve {
    pub label: String,
    pub curve: String,
    pub bour: u64,
    /// For the free family, its parameter `a`.
    pub free_parameter: Option<u32>,
}

/// `x^(2a+1) + x^a y^(a+1) + y^(2a) z`, free for every `a ≥ 2`.
pub fn free_family(a: u32) -> String {
    format!("x^{} + x^{a}*y^{} + y^{}*z", 2 * a + 1, a + 1, 2 * a)
}

/// `y^m z^(n-m) - x^n` for `n > m > 1`, nearly free with a single singular
/// point.
pub fn binomial(m: u32, n: u32) -> String {
    format!("y^{m}*z^{} - x^{n}", n - m)
}

/// `x^(2b+1) z + x^(b+1) y^(b+1) + y^(2b+1) z`, of degree `b + 4`.
pub fn trinomial(b: u32) -> String {
    format!(
        "x^{}*z + x^{}*y^{} + y^{}*z",
        2 * b + 1,
        b + 1,
        b + 1,
        2 * b + 1
    )
}

pub const QUARTIC_TWO: &str = "y^2*z^2 - x^4 + 2*x^3*z - x^2*z^2";
pub const NODAL_CUBIC: &str = "x^3 + x^2*z - y^2*z";
pub const QUARTIC_FOUR: &str = "x^3*y + x^2*y^2 + y^4 - x^4 + y^2*z^2";
pub const QUINTIC_FIVE: &str = "x^5 + x^4*y + x^3*z^2 + y^2*z^3";

/// Two syzygies of degree `a` of the free family whose determinant with
/// the Euler vector is a nonzero multiple of the curve.
pub fn free_family_thetas(a: u32, field: Field) -> (ModuleVector, ModuleVector) {
    let v = |parts: [String; 3]| {
        let comps = parts
            .iter()
            .map(|s| parse_polynomial(s, field).expect("well-formed"))
            .collect();
        ModuleVector::unshifted(comps).expect("three components in one ring")
    };
    let b = a + 1;
    let c = 2 * a + 1;
    let t1 = v([
        "0".into(),
        format!("-y^{a}"),
        format!("{b}*x^{a} + {}*y^{}*z", 2 * a, a - 1),
    ]);
    let t2 = v([
        format!("-{}*y^{a}", b * b),
        format!("{}*x^{a} - {}*y^{}*z", b * c, 2 * a * c, a - 1),
        format!(
            "{}*x^{}*y + {}*y^{}*z^2",
            a * b * b,
            a - 1,
            4 * a * a * c,
            a - 2
        ),
    ]);
    (t1, t2)
}

pub fn builtin_corpus() -> Vec<CorpusCurve> {
    let row = |label: String, curve: String, bour: u64, free_parameter: Option<u32>| CorpusCurve {
        label,
        curve,
        bour,
        free_parameter,
    };
    let mut rows = Vec::new();
    for a in [2, 3] {
        rows.push(row(format!("F_a a={a}"), free_family(a), 0, Some(a)));
    }
    for (m, n) in [(2, 3), (2, 5), (3, 4)] {
        rows.push(row(format!("F_m,n ({m},{n})"), binomial(m, n), 1, None));
    }
    rows.push(row("F_2".into(), QUARTIC_TWO.into(), 2, None));
    rows.push(row("F_3".into(), NODAL_CUBIC.into(), 3, None));
    rows.push(row("F_4".into(), QUARTIC_FOUR.into(), 4, None));
    rows.push(row("F_5".into(), QUINTIC_FIVE.into(), 5, None));
    for b in [2, 3] {
        rows.push(row(
            format!("trinomial b={b}"),
            trinomial(b),
            u64::from(b) + 4,
            None,
        ));
    }
    rows
}
