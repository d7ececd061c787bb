use alloc::vec::Vec;

use super::curve::{jacobian_ideal, Curve};
use super::invariants::{classify, tjurina, Classification, TjurinaData};
use super::points::{projective_points, ZeroLocus};
use super::syzygy::{
    bourbaki_ideal, global_degrees, syzygy_analysis, BourbakiIdealData, EpsilonChoice,
    SyzygyAnalysis,
};
use crate::error::{Error, Result};
use crate::groebner::IdealBasis;

/// A monotonic time source in microseconds.
pub trait Clock {
    fn now_micros(&self) -> u64;
}

/// Reports zero for every stage.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now_micros(&self) -> u64 {
        0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalysisConfig {
    /// Seeds root splitting over prime fields.
    pub seed: u64,
    pub epsilon: EpsilonChoice,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StageTiming {
    pub stage: &'static str,
    pub micros: u64,
}

/// Internal cross-checks of a report. A failed flag marks the report as
/// inconsistent instead of aborting the analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConsistencyFlags {
    pub syzygies_verified: bool,
    pub epsilon_primitive: bool,
    pub e_at_most_d: bool,
    /// `C v = 0`, coprime entries, and offset `e - d`.
    pub kernel_valid: bool,
    pub hilbert_equals_formula: bool,
    /// `Σ Bour_P + residual = deg R/I_ε`.
    pub local_sum_accounts: bool,
    pub bour_at_least_ell: bool,
    pub points_positive: bool,
    pub classification_consistent: bool,
}

impl ConsistencyFlags {
    pub fn all_ok(&self) -> bool {
        self.named().iter().all(|(_, ok)| *ok)
    }

    /// Flags with stable names, in declaration order.
    pub fn named(&self) -> [(&'static str, bool); 9] {
        [
            ("syzygies_verified", self.syzygies_verified),
            ("epsilon_primitive", self.epsilon_primitive),
            ("e_at_most_d", self.e_at_most_d),
            ("kernel_valid", self.kernel_valid),
            ("hilbert_equals_formula", self.hilbert_equals_formula),
            ("local_sum_accounts", self.local_sum_accounts),
            ("bour_at_least_ell", self.bour_at_least_ell),
            ("points_positive", self.points_positive),
            ("classification_consistent", self.classification_consistent),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveReport {
    pub curve: Curve,
    pub jacobian: IdealBasis,
    pub syzygies: SyzygyAnalysis,
    pub bourbaki: BourbakiIdealData,
    pub tau: TjurinaData,
    pub bour_hilbert: u64,
    pub bour_formula: i64,
    /// `V(I_ε)` over the base field with local Bourbaki degrees.
    pub locus: ZeroLocus,
    pub classification: Classification,
    pub flags: ConsistencyFlags,
    pub timings: Vec<StageTiming>,
}

impl CurveReport {
    pub fn d(&self) -> u32 {
        self.syzygies.d
    }

    pub fn e(&self) -> u32 {
        self.syzygies.e
    }

    pub fn bour_local_sum(&self) -> u64 {
        self.locus.local_sum()
    }

    pub fn residual(&self) -> u64 {
        self.locus.residual
    }

    /// Number of base-field points of `V(I_ε)`.
    pub fn ell(&self) -> usize {
        self.locus.len()
    }

    pub fn points_complete(&self) -> bool {
        self.locus.is_complete()
    }
}

pub fn analyze(curve: &Curve, config: &AnalysisConfig) -> Result<CurveReport> {
    analyze_with_clock(curve, config, &NoClock)
}

struct Stopwatch<'a> {
    clock: &'a dyn Clock,
    last: u64,
    stages: Vec<StageTiming>,
}

impl Stopwatch<'_> {
    fn lap(&mut self, stage: &'static str) {
        let now = self.clock.now_micros();
        self.stages.push(StageTiming {
            stage,
            micros: now.saturating_sub(self.last),
        });
        self.last = now;
    }
}

/// The full pipeline: syzygies, `I_ε`, Tjurina data, the three values of
/// `Bour(F)`, and the classification.
pub fn analyze_with_clock(
    curve: &Curve,
    config: &AnalysisConfig,
    clock: &dyn Clock,
) -> Result<CurveReport> {
    let mut watch = Stopwatch {
        clock,
        last: clock.now_micros(),
        stages: Vec::new(),
    };
    let jacobian = jacobian_ideal(curve);
    let syzygies = syzygy_analysis(curve, &config.epsilon)?;
    watch.lap("syzygies");
    let bourbaki = bourbaki_ideal(&syzygies)?;
    watch.lap("bourbaki_ideal");
    let tau = tjurina(curve, config.seed)?;
    watch.lap("tjurina");
    let (bour_hilbert, bour_formula) = global_degrees(&syzygies, &bourbaki, tau.global)?;
    watch.lap("hilbert_degree");
    let locus = projective_points(&bourbaki.ideal, config.seed)?;
    watch.lap("local_degrees");

    let (classification, classification_consistent) =
        match classify(bour_hilbert, syzygies.rank(), &locus) {
            Ok(c) => (c, true),
            Err(Error::InconsistentClassification(_)) => {
                (Classification::from_degree(bour_hilbert), false)
            }
            Err(e) => return Err(e),
        };
    let flags = ConsistencyFlags {
        syzygies_verified: syzygies.verify(),
        epsilon_primitive: syzygies.epsilon().content().is_constant(),
        e_at_most_d: syzygies.e <= syzygies.d,
        kernel_valid: bourbaki.verify() && bourbaki.offset == syzygies.e as i32 - syzygies.d as i32,
        hilbert_equals_formula: bour_hilbert as i64 == bour_formula,
        local_sum_accounts: locus.local_sum() + locus.residual == bour_hilbert,
        bour_at_least_ell: bour_hilbert >= locus.len() as u64,
        points_positive: locus.points.iter().all(|(_, m)| *m >= 1),
        classification_consistent,
    };
    Ok(CurveReport {
        curve: curve.clone(),
        jacobian,
        syzygies,
        bourbaki,
        tau,
        bour_hilbert,
        bour_formula,
        locus,
        classification,
        flags,
        timings: watch.stages,
    })
}
