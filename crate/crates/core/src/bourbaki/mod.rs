//! The Bourbaki degree of a reduced plane curve `F`: from a minimal
//! syzygy `ε` of the Jacobian ideal, the ideal `I_ε` with
//! `Syz(J_F)/<ε> ≅ I_ε(e - d)`, its degree, its points and their local
//! multiplicities.

mod analysis;
mod curve;
mod invariants;
mod points;
mod roots;
mod syzygy;

pub use analysis::{
    analyze, analyze_with_clock, AnalysisConfig, Clock, ConsistencyFlags, CurveReport, NoClock,
    StageTiming,
};
pub use curve::{jacobian_ideal, validate_curve, Curve};
pub use invariants::{classify, saito_check, tjurina, Classification, TjurinaData};
pub use points::{
    local_degree, local_dimension_at_origin, projective_points, random_coordinate_change,
    CoordinateChange, ProjectivePoint, ZeroLocus,
};
pub use syzygy::{
    bourbaki_ideal, global_degrees, syzygy_analysis, BourbakiIdealData, EpsilonChoice,
    SyzygyAnalysis,
};
