#![allow(dead_code)]

use bourbaki_core::bourbaki::{
    analyze, validate_curve, AnalysisConfig, Curve, CurveReport, EpsilonChoice,
};
use bourbaki_core::groebner::{ideal_equal, IdealBasis, ModuleVector};
use bourbaki_core::polyring::{parse_polynomial, Field, PolyRing, Polynomial};

pub const QQ: Field = Field::Rationals;

pub fn poly(s: &str) -> Polynomial {
    parse_polynomial(s, QQ).unwrap()
}

pub fn curve(s: &str) -> Curve {
    validate_curve(&poly(s)).unwrap()
}

pub fn ideal(gens: &[&str]) -> IdealBasis {
    IdealBasis::new(PolyRing::projective(QQ), gens.iter().map(|s| poly(s))).unwrap()
}

pub fn vector(parts: [&str; 3]) -> ModuleVector {
    ModuleVector::unshifted(parts.iter().map(|s| poly(s)).collect()).unwrap()
}

pub fn config(epsilon: EpsilonChoice) -> AnalysisConfig {
    AnalysisConfig { seed: 0, epsilon }
}

/// The report whose `I_ε` equals `target`, trying each minimal generator
/// of least degree in turn.
pub fn report_with_ideal(c: &Curve, target: &IdealBasis) -> CurveReport {
    for i in 0.. {
        let r = analyze(c, &config(EpsilonChoice::Index(i)))
            .expect("no generator of least degree gives the target ideal");
        if ideal_equal(&r.bourbaki.ideal, target).unwrap() {
            return r;
        }
    }
    unreachable!()
}

pub fn nodal_cubic() -> Curve {
    curve("y^2*z - x^3 - x^2*z")
}

pub fn quartic_two() -> Curve {
    curve("y^2*z^2 - x^4 + 2*x^3*z - x^2*z^2")
}

/// `y^m z^(n-m) - x^n`.
pub fn binomial(m: u32, n: u32) -> Curve {
    curve(&format!("y^{m}*z^{} - x^{n}", n - m))
}

pub fn trinomial(b: u32) -> Curve {
    curve(&format!(
        "x^{}*z + x^{}*y^{} + y^{}*z",
        2 * b + 1,
        b + 1,
        b + 1,
        2 * b + 1
    ))
}

pub fn trinomial_ideal(b: u32) -> IdealBasis {
    let last = format!("{}*y^{b}*z - {}*x^{}", 2 * b + 1, b + 1, b + 1);
    ideal(&["y*z^2", "x^2*z", "x*y*z", &last])
}

pub fn free_family(a: u32) -> Curve {
    curve(&format!(
        "x^{} + x^{a}*y^{} + y^{}*z",
        2 * a + 1,
        a + 1,
        2 * a
    ))
}

/// Two syzygies of degree `a` of `free_family(a)`.
pub fn free_family_thetas(a: u32) -> (ModuleVector, ModuleVector) {
    let a1 = a + 1;
    let t1 = vector([
        "0",
        &format!("-y^{a}"),
        &format!("{a1}*x^{a} + {}*y^{}*z", 2 * a, a - 1),
    ]);
    let t2 = vector([
        &format!("-{}*y^{a}", a1 * a1),
        &format!(
            "{}*x^{a} - {}*y^{}*z",
            a1 * (2 * a + 1),
            2 * a * (2 * a + 1),
            a - 1
        ),
        &format!(
            "{}*x^{}*y + {}*y^{}*z^2",
            a * a1 * a1,
            a - 1,
            4 * a * a * (2 * a + 1),
            a - 2
        ),
    ]);
    (t1, t2)
}

pub const F4: &str = "x^3*y + x^2*y^2 + y^4 - x^4 + y^2*z^2";
pub const F5: &str = "x^5 + x^4*y + x^3*z^2 + y^2*z^3";
