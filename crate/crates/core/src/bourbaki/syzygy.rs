use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::curve::Curve;
use crate::error::{Error, Result};
use crate::groebner::{
    hilbert_degree, kernel_of_presentation, minimalize_generators, minimalize_in_order,
    polynomial_syzygies, quotient_presentation, IdealBasis, ModuleVector, PresentationMatrix,
};
use crate::polyring::Polynomial;

/// Which minimal syzygy of least degree plays the role of `ε`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum EpsilonChoice {
    /// The smallest leading term under position-over-term grevlex.
    #[default]
    Smallest,
    /// The `i`-th least-degree minimal generator, counting from 0 in the
    /// order of [`SyzygyAnalysis::minimal_generators`].
    Index(usize),
    /// A given syzygy of least degree; the other generators are chosen
    /// around it.
    Given(ModuleVector),
}

/// Minimal generators of `Syz(J_F) ⊆ R^3` and the chosen `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyAnalysis {
    pub partials: [Polynomial; 3],
    /// Unshifted vectors, ascending by degree.
    pub minimal_generators: Vec<ModuleVector>,
    pub degrees: Vec<u32>,
    pub chosen: usize,
    /// `deg ε`.
    pub e: u32,
    pub d: u32,
}

impl SyzygyAnalysis {
    pub fn epsilon(&self) -> &ModuleVector {
        &self.minimal_generators[self.chosen]
    }

    /// The generators other than `ε`, whose classes generate `Syz(J_F)/<ε>`.
    pub fn quotient_generators(&self) -> Vec<&ModuleVector> {
        self.minimal_generators
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != self.chosen)
            .map(|(_, g)| g)
            .collect()
    }

    /// `k`, the number of minimal generators.
    pub fn rank(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Checks `ε_i · (F_x, F_y, F_z) = 0` for every generator.
    pub fn verify(&self) -> bool {
        self.minimal_generators
            .iter()
            .all(|g| g.dot(&self.partials).is_ok_and(|s| s.is_zero()))
    }
}

pub fn syzygy_analysis(curve: &Curve, choice: &EpsilonChoice) -> Result<SyzygyAnalysis> {
    let partials = curve.partials();
    let unshifted = vec![0; 3];
    let syz = polynomial_syzygies(&partials)?
        .iter()
        .map(|s| s.with_shifts(unshifted.clone()))
        .collect::<Result<Vec<_>>>()?;
    let mut gens = minimalize_generators(&syz)?;
    let least = gens
        .first()
        .and_then(ModuleVector::degree)
        .ok_or(Error::NoSyzygyQuotient)?;
    let chosen = match choice {
        EpsilonChoice::Smallest => 0,
        EpsilonChoice::Index(i) => {
            let count = gens.iter().filter(|g| g.degree() == Some(least)).count();
            if *i >= count {
                return Err(Error::InvalidEpsilon(format!(
                    "index {i} but only {count} minimal generators of degree {least}"
                )));
            }
            *i
        }
        EpsilonChoice::Given(v) => {
            let v = v.with_shifts(unshifted.clone())?;
            if !v.dot(&partials)?.is_zero() {
                return Err(Error::NotASyzygy);
            }
            if v.degree() != Some(least) {
                return Err(Error::InvalidEpsilon(format!(
                    "degree {:?}, expected a homogeneous syzygy of degree {least}",
                    v.degree()
                )));
            }
            let mut preferred = vec![v];
            preferred.extend(gens);
            gens = minimalize_in_order(&preferred)?;
            0
        }
    };
    let degrees = gens
        .iter()
        .map(|g| {
            g.degree()
                .map(|d| d as u32)
                .ok_or(Error::NotHomogeneousVector)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SyzygyAnalysis {
        partials,
        e: degrees[chosen],
        d: curve.d(),
        minimal_generators: gens,
        degrees,
        chosen,
    })
}

/// The ideal `I_ε` with the data of its construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BourbakiIdealData {
    /// Relations among the images of the quotient generators.
    pub presentation: PresentationMatrix,
    /// `(φ(δ_2), ..., φ(δ_k))`, normalized.
    pub kernel_vector: ModuleVector,
    /// The common factor removed from the raw kernel vector.
    pub gcd_divided: Polynomial,
    /// `deg φ(δ_i) - deg δ_i`.
    pub offset: i32,
    pub ideal: IdealBasis,
}

impl BourbakiIdealData {
    /// `C v = 0`, homogeneity with the recorded offset, and coprime entries.
    pub fn verify(&self) -> bool {
        let annihilated = self
            .presentation
            .apply(self.kernel_vector.components())
            .is_ok_and(|r| r.iter().all(Polynomial::is_zero));
        let coprime = self.kernel_vector.content().is_constant();
        annihilated && coprime && self.kernel_vector.degree() == Some(self.offset)
    }
}

/// `I_ε` as the image of the unique (up to scalar) map from
/// `Syz(J_F)/<ε>` into `R`: the kernel of the quotient presentation is
/// free of rank one, and its generator lists the images of the `δ_i`.
pub fn bourbaki_ideal(s: &SyzygyAnalysis) -> Result<BourbakiIdealData> {
    if s.rank() < 2 {
        return Err(Error::NoSyzygyQuotient);
    }
    let presentation = quotient_presentation(&s.minimal_generators, s.chosen)?;
    let kernel = kernel_of_presentation(&presentation)?;
    if kernel.len() != 1 {
        return Err(Error::DegenerateKernel);
    }
    let raw = &kernel[0];
    let gcd_divided = raw.content();
    let kernel_vector = raw.normalized();
    let offset = kernel_vector.degree().ok_or(Error::NotHomogeneousVector)?;
    let ideal = IdealBasis::new(
        presentation.ring,
        kernel_vector.components().iter().cloned(),
    )?;
    Ok(BourbakiIdealData {
        presentation,
        kernel_vector,
        gcd_divided,
        offset,
        ideal,
    })
}

/// `Bour(F)` as `deg R/I_ε` and as `d² + e(e - d) - τ`.
pub fn global_degrees(
    s: &SyzygyAnalysis,
    data: &BourbakiIdealData,
    tau: u64,
) -> Result<(u64, i64)> {
    let hilbert = hilbert_degree(&data.ideal)?;
    let (d, e) = (s.d as i64, s.e as i64);
    Ok((hilbert, d * d + e * (e - d) - tau as i64))
}
