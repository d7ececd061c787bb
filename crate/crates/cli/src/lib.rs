//! Text formats, commands and reports for the `bourbaki` binary.

pub mod batch;
pub mod corpus;
pub mod report;
pub mod spec;
pub mod table;
pub mod verify;

use std::time::Instant;

use bourbaki_core::bourbaki::{
    analyze_with_clock, AnalysisConfig, Clock, CurveReport, EpsilonChoice, NoClock,
};
use bourbaki_core::polyring::Field;

pub use report::ReportDocument;
pub use spec::{parse_field, CurveSpec, Expectation};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Engine(#[from] bourbaki_core::error::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// Settings shared by every command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub field: Field,
    pub seed: u64,
    pub epsilon: EpsilonChoice,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            field: Field::Rationals,
            seed: 0,
            epsilon: EpsilonChoice::Smallest,
            timings: false,
        }
    }
}

impl Options {
    pub fn config(&self) -> AnalysisConfig {
        AnalysisConfig {
            seed: self.seed,
            epsilon: self.epsilon.clone(),
        }
    }
}

/// Wall-clock time since construction.
pub struct StdClock(Instant);

impl StdClock {
    pub fn start() -> Self {
        StdClock(Instant::now())
    }
}

impl Clock for StdClock {
    fn now_micros(&self) -> u64 {
        self.0.elapsed().as_micros() as u64
    }
}

/// Parses, validates and analyzes one curve.
pub fn run_analysis(text: &str, opts: &Options) -> Result<CurveReport> {
    let curve = spec::parse_curve(text, opts.field)?;
    let report = if opts.timings {
        analyze_with_clock(&curve, &opts.config(), &StdClock::start())?
    } else {
        analyze_with_clock(&curve, &opts.config(), &NoClock)?
    };
    Ok(report)
}

pub fn analyze_document(text: &str, opts: &Options) -> Result<(CurveReport, ReportDocument)> {
    let report = run_analysis(text, opts)?;
    let doc = ReportDocument::new(&report, opts);
    Ok((report, doc))
}
