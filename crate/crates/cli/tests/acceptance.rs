//! One line per acceptance criterion; the test fails if any line does.

use std::process::Command;
use std::time::Instant;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bourbaki_cli::corpus::{
    binomial, free_family, free_family_thetas, trinomial, NODAL_CUBIC, QUARTIC_FOUR, QUARTIC_TWO,
    QUINTIC_FIVE,
};
use bourbaki_cli::verify::verify_report;
use bourbaki_core::bourbaki::{
    analyze, local_degree, saito_check, validate_curve, AnalysisConfig, Classification, Curve,
    CurveReport, EpsilonChoice, ProjectivePoint,
};
use bourbaki_core::error::Error;
use bourbaki_core::groebner::{ideal_equal, IdealBasis, ModuleVector};
use bourbaki_core::oracle::syzygy_verify;
use bourbaki_core::polyring::{
    monomials_of_degree, parse_polynomial, Field, Monomial, PolyRing, Polynomial, Vars,
};

type Outcome = Result<String, String>;

const QQ: Field = Field::Rationals;
const FP: Field = Field::Prime(32003);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn curve(s: &str) -> Curve {
    validate_curve(&parse_polynomial(s, QQ).unwrap()).unwrap()
}

fn ideal(gens: &[&str]) -> IdealBasis {
    IdealBasis::new(
        PolyRing::projective(QQ),
        gens.iter().map(|s| parse_polynomial(s, QQ).unwrap()),
    )
    .unwrap()
}

fn point(c: [i64; 3]) -> ProjectivePoint {
    ProjectivePoint::from_integers(QQ, c).unwrap()
}

fn run(c: &Curve, epsilon: EpsilonChoice) -> Result<CurveReport, String> {
    analyze(c, &AnalysisConfig { seed: 0, epsilon }).map_err(|e| e.to_string())
}

/// The analysis whose `I_ε` equals `target`, over the minimal generators
/// of least degree.
fn with_ideal(c: &Curve, target: &IdealBasis) -> Result<CurveReport, String> {
    for i in 0.. {
        let r = run(c, EpsilonChoice::Index(i))?;
        if ideal_equal(&r.bourbaki.ideal, target).unwrap() {
            return Ok(r);
        }
    }
    unreachable!()
}

fn sorted(mut t: Vec<(ProjectivePoint, u64)>) -> Vec<(ProjectivePoint, u64)> {
    t.sort();
    t
}

fn three_ways(r: &CurveReport, bour: u64) -> Result<(), String> {
    ensure!(
        r.bour_hilbert == bour
            && r.bour_formula == bour as i64
            && r.bour_local_sum() == bour
            && r.residual() == 0,
        "expected {bour}: hilbert {}, formula {}, local {} + {}",
        r.bour_hilbert,
        r.bour_formula,
        r.bour_local_sum(),
        r.residual()
    );
    ensure!(r.flags.all_ok(), "flags {:?}", r.flags);
    Ok(())
}

fn nodal() -> Result<CurveReport, String> {
    let c = curve(NODAL_CUBIC);
    let eps = ModuleVector::unshifted(
        ["2*y*z", "3*y^2 + 2*x*z", "-6*y*z"]
            .iter()
            .map(|s| parse_polynomial(s, QQ).unwrap())
            .collect(),
    )
    .unwrap();
    run(&c, EpsilonChoice::Given(eps))
}

fn criterion_1(reports: &mut Vec<CurveReport>) -> Outcome {
    let r = nodal()?;
    three_ways(&r, 3)?;
    ensure!(
        ideal_equal(
            &r.bourbaki.ideal,
            &ideal(&["2*z^2", "y*z", "2*x*z + 3*y^2"])
        )
        .unwrap(),
        "I_eps = {:?}",
        r.bourbaki.ideal.generators()
    );
    ensure!(
        r.locus.points == vec![(point([1, 0, 0]), 3)],
        "locus {:?}",
        r.locus.points
    );
    ensure!(
        local_degree(&r.bourbaki.ideal, &point([1, 0, 0])) == Ok(3),
        "local degree at (1:0:0)"
    );
    reports.push(r);
    Ok("Bour 3 three ways, V(I_eps) = {(1:0:0)} with local degree 3".into())
}

fn criterion_2(reports: &mut Vec<CurveReport>) -> Outcome {
    let r = with_ideal(&curve(QUARTIC_TWO), &ideal(&["2*x*y - y*z", "z"]))?;
    ensure!(r.tau.global == 5 && r.tau.complete, "tau {}", r.tau.global);
    let table = sorted(vec![
        (point([0, 0, 1]), 1),
        (point([0, 1, 0]), 3),
        (point([1, 0, 1]), 1),
    ]);
    ensure!(
        sorted(r.tau.table.clone()) == table,
        "tau table {:?}",
        r.tau.table
    );
    ensure!(r.e() == 2, "e = {}", r.e());
    let d = i64::from(r.d());
    let e = i64::from(r.e());
    ensure!(d * d + e * e - e * d - 5 == 2, "formula terms");
    three_ways(&r, 2)?;
    let locals: Vec<u64> = r.locus.points.iter().map(|(_, m)| *m).collect();
    ensure!(locals == vec![1, 1], "local degrees {locals:?}");
    reports.push(r);
    Ok("tau 5 as 1+3+1, e = 2, Bour 2 by formula, Hilbert degree and 1+1".into())
}

fn criterion_3(reports: &mut Vec<CurveReport>) -> Outcome {
    for (m, n) in [(2, 3), (2, 5), (3, 4), (3, 7), (4, 5)] {
        let r = with_ideal(&curve(&binomial(m, n)), &ideal(&["y", "z"]))?;
        ensure!(
            r.tau.global == u64::from((n - 1) * (n - 2)),
            "({m},{n}): tau {}",
            r.tau.global
        );
        three_ways(&r, 1)?;
        ensure!(
            r.classification == Classification::NearlyFree,
            "({m},{n}): {}",
            r.classification
        );
        reports.push(r);
    }
    Ok("five curves: tau (n-1)(n-2), Bour 1, nearly free".into())
}

fn criterion_4(reports: &mut Vec<CurveReport>) -> Outcome {
    for b in [2u32, 3, 4] {
        let last = format!("{}*y^{b}*z - {}*x^{}", 2 * b + 1, b + 1, b + 1);
        let r = with_ideal(
            &curve(&trinomial(b)),
            &ideal(&["y*z^2", "x^2*z", "x*y*z", &last]),
        )?;
        three_ways(&r, u64::from(b + 4))?;
        let table = sorted(vec![
            (point([0, 1, 0]), u64::from(b + 2)),
            (point([0, 0, 1]), 2),
        ]);
        ensure!(
            sorted(r.locus.points.clone()) == table,
            "b = {b}: locus {:?}",
            r.locus.points
        );
        let mut degrees = vec![b + 2; 4];
        degrees.push(2 * b);
        degrees.sort();
        ensure!(
            r.syzygies.degrees == degrees,
            "b = {b}: degrees {:?}",
            r.syzygies.degrees
        );
        reports.push(r);
    }
    Ok("b = 2, 3, 4: Bour b+4 from local degrees b+2 and 2".into())
}

fn criterion_5(reports: &mut Vec<CurveReport>) -> Outcome {
    for a in [2, 3] {
        let c = curve(&free_family(a));
        let (t1, t2) = free_family_thetas(a, QQ);
        ensure!(
            saito_check(&c, &t1, &t2) == Ok(true),
            "a = {a}: Saito check failed"
        );
        let r = run(&c, EpsilonChoice::Smallest)?;
        ensure!(
            r.bour_hilbert == 0 && r.classification == Classification::Free,
            "a = {a}: {}",
            r.classification
        );
        ensure!(r.flags.all_ok(), "a = {a}: flags");
        reports.push(r);
    }
    for (src, bour) in [(NODAL_CUBIC, 3), (QUARTIC_FOUR, 4), (QUINTIC_FIVE, 5)] {
        let r = run(&curve(src), EpsilonChoice::Smallest)?;
        ensure!(
            r.bour_hilbert == bour && r.bour_formula == bour as i64,
            "{src}: {}",
            r.bour_hilbert
        );
        ensure!(
            r.bour_local_sum() + r.residual() == bour && r.flags.all_ok(),
            "{src}: local accounting"
        );
        reports.push(r);
    }
    Ok("F_a free by Saito for a = 2, 3; table rows 3, 4, 5".into())
}

fn criterion_6(reports: &[CurveReport]) -> Outcome {
    let mut count = 0;
    for r in reports {
        for c in verify_report(r, 12).map_err(|e| e.to_string())? {
            ensure!(
                c.passed,
                "{}: {} ({})",
                r.curve.polynomial(),
                c.name,
                c.detail
            );
            count += 1;
        }
    }
    Ok(format!("{count} oracle checks on {} curves", reports.len()))
}

fn random_polynomial(rng: &mut ChaCha8Rng) -> Polynomial {
    let ring = PolyRing::projective(FP);
    let small = |rng: &mut ChaCha8Rng| FP.from_i64(i64::from(rng.next_u32() % 19) - 9);
    if rng.next_u32().is_multiple_of(4) {
        // a product of lines, often singular and sometimes free
        let k = 2 + rng.next_u32() % 4;
        return (0..k).fold(Polynomial::one(ring), |acc, _| {
            let l = Polynomial::from_terms(ring, (0..3).map(|v| (Monomial::var(v, 1), small(rng))));
            acc.checked_mul(&l).unwrap()
        });
    }
    let d = 2 + rng.next_u32() % 4;
    let monos = monomials_of_degree(Vars::XYZ, d);
    let terms = 2 + rng.next_u32() as usize % monos.len().min(8);
    Polynomial::from_terms(
        ring,
        (0..terms).map(|_| (monos[rng.next_u32() as usize % monos.len()], small(rng))),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut accepted, mut singular, mut free, mut incomplete) = (0, 0, 0, 0);
    while accepted < 200 {
        let Ok(c) = validate_curve(&random_polynomial(&mut rng)) else {
            continue;
        };
        accepted += 1;
        let src = c.polynomial().to_string();
        ensure!(c.euler_identity_holds(), "{src}: Euler identity");
        let r = match analyze(&c, &AnalysisConfig::default()) {
            Err(Error::InconsistentClassification(m)) => return Err(format!("{src}: {m}")),
            other => other.map_err(|e| format!("{src}: {e}"))?,
        };
        ensure!(
            r.syzygies
                .minimal_generators
                .iter()
                .all(|s| syzygy_verify(s, &c.partials())),
            "{src}: syzygy fails substitution"
        );
        ensure!(r.e() <= r.d(), "{src}: e > d");
        ensure!(r.bour_hilbert >= r.ell() as u64, "{src}: Bour < ell");
        ensure!(
            !r.tau.complete || r.bour_hilbert as i64 == r.bour_formula,
            "{src}: hilbert != formula"
        );
        ensure!(
            r.bour_local_sum() + r.residual() == r.bour_hilbert,
            "{src}: local accounting"
        );
        ensure!(r.flags.classification_consistent, "{src}: classification");
        singular += usize::from(r.tau.global > 0);
        free += usize::from(r.classification == Classification::Free);
        incomplete += usize::from(!r.tau.complete);
    }
    Ok(format!(
        "200 curves over F_32003 ({singular} singular, {free} free, {incomplete} with irrational singular points)"
    ))
}

fn cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bourbaki"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.success(), "{args:?} exited with {}", out.status);
    Ok(out.stdout)
}

fn criterion_8() -> Outcome {
    let mut runs: Vec<Vec<&str>> = vec![vec!["paper-table", "--format", "json"]];
    for src in [NODAL_CUBIC, QUARTIC_TWO, QUINTIC_FIVE] {
        runs.push(vec![
            "analyze", "--curve", src, "--format", "json", "--seed", "11",
        ]);
        runs.push(vec![
            "analyze", "--curve", src, "--format", "json", "--field", "fp=32003", "--seed", "5",
        ]);
    }
    for args in &runs {
        let first = cli(args)?;
        for _ in 0..2 {
            ensure!(cli(args)? == first, "{args:?} output differs between runs");
        }
    }
    Ok(format!(
        "{} commands, three runs each, byte-identical",
        runs.len()
    ))
}

fn main() {
    let mut reports = Vec::new();
    let mut results: Vec<(usize, Outcome, f64)> = Vec::new();
    let mut timed = |n: usize, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let out = f();
        results.push((n, out, start.elapsed().as_secs_f64()));
    };
    timed(1, &mut || criterion_1(&mut reports));
    timed(2, &mut || criterion_2(&mut reports));
    timed(3, &mut || criterion_3(&mut reports));
    timed(4, &mut || criterion_4(&mut reports));
    timed(5, &mut || criterion_5(&mut reports));
    timed(6, &mut || criterion_6(&reports));
    timed(7, &mut criterion_7);
    timed(8, &mut criterion_8);
    let mut failed = 0;
    for (n, out, secs) in &results {
        match out {
            Ok(msg) => println!("criterion {n}: PASS ({secs:.2}s) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n}: FAIL ({secs:.2}s) {msg}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
