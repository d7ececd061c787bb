use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::curve::{jacobian_ideal, Curve};
use super::points::{projective_points, ProjectivePoint, ZeroLocus};
use crate::error::{Error, Result};
use crate::groebner::ModuleVector;
use crate::polyring::{PolyRing, Polynomial};

/// Global and local Tjurina numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TjurinaData {
    /// `deg R/J_F`, which counts every singular point over the closure.
    pub global: u64,
    /// Base-field singular points with `τ_P`.
    pub table: Vec<(ProjectivePoint, u64)>,
    /// Whether the table accounts for all of `global`.
    pub complete: bool,
}

/// `τ_P` is the multiplicity of `P` in `V(J_F)`: by the Euler identity,
/// `F` itself lies in the Jacobian ideal, so this is the Tjurina algebra.
pub fn tjurina(curve: &Curve, seed: u64) -> Result<TjurinaData> {
    let locus = projective_points(&jacobian_ideal(curve), seed)?;
    Ok(TjurinaData {
        global: locus.degree,
        complete: locus.is_complete(),
        table: locus.points,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Free,
    NearlyFree,
    /// Carries `Bour(F) ≥ 2`.
    Other(u64),
}

impl Classification {
    pub fn from_degree(bour: u64) -> Self {
        match bour {
            0 => Classification::Free,
            1 => Classification::NearlyFree,
            b => Classification::Other(b),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Classification::Free => "free",
            Classification::NearlyFree => "nearly-free",
            Classification::Other(_) => "other",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Other(b) => write!(f, "other({b})"),
            c => f.write_str(c.tag()),
        }
    }
}

/// Classifies by `Bour(F)`, cross-checked against the number of minimal
/// syzygies (free curves have exactly two) and against `V(I_ε)` (nearly
/// free curves have one point of multiplicity one).
pub fn classify(bour: u64, minimal_generators: usize, locus: &ZeroLocus) -> Result<Classification> {
    let class = Classification::from_degree(bour);
    if (bour == 0) != (minimal_generators == 2) {
        return Err(Error::InconsistentClassification(format!(
            "Bour = {bour} with {minimal_generators} minimal syzygies"
        )));
    }
    let single_simple_point =
        locus.residual == 0 && locus.points.len() == 1 && locus.points[0].1 == 1;
    if (bour == 1) != single_simple_point {
        return Err(Error::InconsistentClassification(format!(
            "Bour = {bour} but V(I_ε) has {} points with multiplicities {:?} and residual {}",
            locus.points.len(),
            locus.points.iter().map(|(_, m)| *m).collect::<Vec<_>>(),
            locus.residual
        )));
    }
    Ok(class)
}

/// Saito's criterion: two syzygies of degrees summing to `d` whose
/// determinant with the Euler vector `(x, y, z)` is a nonzero constant
/// multiple of `F` prove that the curve is free.
pub fn saito_check(curve: &Curve, theta1: &ModuleVector, theta2: &ModuleVector) -> Result<bool> {
    let partials = curve.partials();
    for t in [theta1, theta2] {
        if t.rank() != 3 || !t.dot(&partials)?.is_zero() {
            return Err(Error::NotASyzygy);
        }
    }
    let unshifted = |t: &ModuleVector| t.with_shifts(alloc::vec![0; 3]).map(|v| v.degree());
    let (Some(d1), Some(d2)) = (unshifted(theta1)?, unshifted(theta2)?) else {
        return Ok(false);
    };
    if d1 + d2 + 1 != curve.degree() as i32 {
        return Ok(false);
    }
    let ring = PolyRing::projective(curve.field());
    let euler: [Polynomial; 3] = core::array::from_fn(|v| Polynomial::variable(ring, v));
    let det = determinant([&euler, theta1.components(), theta2.components()]);
    Ok(det
        .div_exact(curve.polynomial())
        .is_some_and(|c| c.is_constant() && !c.is_zero()))
}

fn determinant(rows: [&[Polynomial]; 3]) -> Polynomial {
    let minor = |i: usize, j: usize| &(&rows[1][i] * &rows[2][j]) - &(&rows[1][j] * &rows[2][i]);
    let a = &rows[0][0] * &minor(1, 2);
    let b = &rows[0][1] * &minor(0, 2);
    let c = &rows[0][2] * &minor(0, 1);
    &(&a - &b) + &c
}
