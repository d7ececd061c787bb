//! Engine results checked against the brute-force linear-algebra oracle.

use serde::{Deserialize, Serialize};

use bourbaki_core::bourbaki::{CurveReport, ProjectivePoint};
use bourbaki_core::groebner::{
    groebner_basis, hilbert_degree, saturation, standard_monomial_count, IdealBasis,
};
use bourbaki_core::oracle::{
    degree_bruteforce, graded_dim_bruteforce, local_dim_bruteforce, syzygy_verify,
};
use bourbaki_core::polyring::Polynomial;

use crate::{run_analysis, Options, Result};

/// Truncation order past which a local dimension counts as unstable.
pub const LOCAL_CAP: u32 = 30;
/// Consecutive equal graded dimensions required for a degree.
pub const DEGREE_WINDOW: u32 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

fn graded(name: &str, ideal: &IdealBasis, max: u32) -> Result<Check> {
    let gb = groebner_basis(ideal);
    let mut engine = Vec::new();
    let mut oracle = Vec::new();
    for n in 0..=max {
        engine.push(standard_monomial_count(&gb, n));
        oracle.push(graded_dim_bruteforce(ideal, n)?);
    }
    let detail = if engine == oracle {
        format!("{engine:?}")
    } else {
        format!("engine {engine:?}, oracle {oracle:?}")
    };
    Ok(Check::new(
        format!("graded dimensions of {name}, degrees 0..={max}"),
        engine == oracle,
        detail,
    ))
}

fn degree(name: &str, ideal: &IdealBasis) -> Result<Check> {
    let engine = hilbert_degree(ideal)?;
    let check = match degree_bruteforce(ideal, DEGREE_WINDOW) {
        Ok(oracle) => Check::new(
            format!("degree of {name}"),
            engine == oracle,
            format!("hilbert {engine}, oracle {oracle}"),
        ),
        Err(e) => Check::new(format!("degree of {name}"), false, e.to_string()),
    };
    Ok(check)
}

fn local(name: &str, ideal: &IdealBasis, table: &[(ProjectivePoint, u64)]) -> Vec<Check> {
    table
        .iter()
        .map(|(p, m)| {
            let name = format!("{name} at {p}");
            let oracle = ideal
                .dehomogenize(p.chart())
                .translate(&p.affine())
                .and_then(|j| local_dim_bruteforce(&j, LOCAL_CAP));
            match oracle {
                Ok(o) => Check::new(name, o == *m, format!("engine {m}, oracle {o}")),
                Err(e) => Check::new(name, false, e.to_string()),
            }
        })
        .collect()
}

/// `<F, F_u, F_v>` for the two coordinates other than the chart variable:
/// its local dimension at a point of that chart is the Tjurina number.
fn tjurina_ideal(r: &CurveReport, chart: usize) -> Result<IdealBasis> {
    let partials = r.curve.partials();
    let mut gens: Vec<Polynomial> = vec![r.curve.polynomial().clone()];
    gens.extend((0..3).filter(|&v| v != chart).map(|v| partials[v].clone()));
    Ok(IdealBasis::from_polynomials(&gens)?)
}

/// Every check for one curve, in a fixed order.
pub fn verify_report(r: &CurveReport, max_degree: u32) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let partials = r.curve.partials();
    let syz_ok = r
        .syzygies
        .minimal_generators
        .iter()
        .all(|s| syzygy_verify(s, &partials));
    checks.push(Check::new(
        "syzygies by substitution",
        syz_ok,
        format!("{} generators", r.syzygies.minimal_generators.len()),
    ));

    let m = IdealBasis::from_polynomials(
        &(0..3)
            .map(|v| Polynomial::variable(r.curve.ring(), v))
            .collect::<Vec<_>>(),
    )?;
    let (jac_sat, _) = saturation(&r.jacobian, &m)?;
    let (ieps_sat, _) = saturation(&r.bourbaki.ideal, &m)?;
    for (name, ideal) in [
        ("J_F", &r.jacobian),
        ("I_eps", &r.bourbaki.ideal),
        ("J_F saturated", &jac_sat),
        ("I_eps saturated", &ieps_sat),
    ] {
        checks.push(graded(name, ideal, max_degree)?);
    }
    checks.push(degree("J_F", &r.jacobian)?);
    checks.push(degree("I_eps", &r.bourbaki.ideal)?);

    checks.extend(local(
        "local Bourbaki degree",
        &r.bourbaki.ideal,
        &r.locus.points,
    ));
    for (p, tau) in &r.tau.table {
        let j = tjurina_ideal(r, p.chart())?;
        checks.extend(local("Tjurina number", &j, &[(p.clone(), *tau)]));
    }

    let table_sum: u64 = r.tau.table.iter().map(|(_, t)| t).sum();
    checks.push(Check::new(
        "Tjurina table sums to tau",
        !r.tau.complete || table_sum == r.tau.global,
        format!(
            "sum {table_sum}, tau {}, complete {}",
            r.tau.global, r.tau.complete
        ),
    ));
    let three = r.bour_hilbert as i64 == r.bour_formula
        && r.bour_local_sum() + r.residual() == r.bour_hilbert;
    checks.push(Check::new(
        "three global values agree",
        three,
        format!(
            "hilbert {}, formula {}, local sum {} + residual {}",
            r.bour_hilbert,
            r.bour_formula,
            r.bour_local_sum(),
            r.residual()
        ),
    ));
    let failed: Vec<&str> = r
        .flags
        .named()
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    let detail = if failed.is_empty() {
        "all set".to_string()
    } else {
        failed.join(", ")
    };
    checks.push(Check::new("consistency flags", failed.is_empty(), detail));
    Ok(checks)
}

pub fn verify(text: &str, opts: &Options, max_degree: u32) -> Result<(CurveReport, Vec<Check>)> {
    let r = run_analysis(text, opts)?;
    let checks = verify_report(&r, max_degree)?;
    Ok((r, checks))
}

pub fn render(checks: &[Check]) -> String {
    checks
        .iter()
        .map(|c| {
            format!(
                "{} {}: {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )
        })
        .collect()
}
