//! The machine-readable report and its plain-text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use bourbaki_core::bourbaki::{CurveReport, ProjectivePoint};

use crate::{Options, VERSION};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointValue {
    pub point: [String; 3],
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TauSection {
    pub global: u64,
    pub table: Vec<PointValue>,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BourSection {
    pub hilbert: u64,
    pub formula: i64,
    pub local_sum: u64,
    pub residual: u64,
}

/// A [`CurveReport`] flattened to strings and integers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub seed: u64,
    pub field: String,
    pub curve: String,
    pub d: u32,
    pub e: u32,
    pub syzygy_degrees: Vec<u32>,
    pub bourbaki_ideal: Vec<String>,
    pub tau: TauSection,
    pub bour: BourSection,
    pub points: Vec<[String; 3]>,
    pub local_table: Vec<PointValue>,
    pub ell: usize,
    pub classification: String,
    pub flags: BTreeMap<String, bool>,
    /// Empty unless timings were requested, so reports stay reproducible.
    pub timings_ms: BTreeMap<String, f64>,
}

fn coords(p: &ProjectivePoint) -> [String; 3] {
    p.coordinates().clone().map(|c| c.to_string())
}

fn entries(table: &[(ProjectivePoint, u64)]) -> Vec<PointValue> {
    let mut t = table.to_vec();
    t.sort();
    t.iter()
        .map(|(p, v)| PointValue {
            point: coords(p),
            value: *v,
        })
        .collect()
}

impl ReportDocument {
    pub fn new(r: &CurveReport, opts: &Options) -> Self {
        let local_table = entries(&r.locus.points);
        ReportDocument {
            version: VERSION.to_string(),
            seed: opts.seed,
            field: r.curve.field().to_string(),
            curve: r.curve.polynomial().to_string(),
            d: r.d(),
            e: r.e(),
            syzygy_degrees: r.syzygies.degrees.clone(),
            bourbaki_ideal: r
                .bourbaki
                .ideal
                .generators()
                .iter()
                .map(|g| g.to_string())
                .collect(),
            tau: TauSection {
                global: r.tau.global,
                table: entries(&r.tau.table),
                complete: r.tau.complete,
            },
            bour: BourSection {
                hilbert: r.bour_hilbert,
                formula: r.bour_formula,
                local_sum: r.bour_local_sum(),
                residual: r.residual(),
            },
            points: local_table.iter().map(|e| e.point.clone()).collect(),
            local_table,
            ell: r.ell(),
            classification: r.classification.to_string(),
            flags: r
                .flags
                .named()
                .iter()
                .map(|(n, ok)| (n.to_string(), *ok))
                .collect(),
            timings_ms: if opts.timings {
                r.timings
                    .iter()
                    .map(|t| (t.stage.to_string(), t.micros as f64 / 1000.0))
                    .collect()
            } else {
                BTreeMap::new()
            },
        }
    }

    pub fn consistent(&self) -> bool {
        self.flags.values().all(|ok| *ok)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let point = |p: &[String; 3]| format!("({}:{}:{})", p[0], p[1], p[2]);
        let table = |t: &[PointValue]| {
            if t.is_empty() {
                "none".to_string()
            } else {
                t.iter()
                    .map(|e| format!("{} -> {}", point(&e.point), e.value))
                    .collect::<Vec<_>>()
                    .join(", ")
            }
        };
        let degrees: Vec<String> = self.syzygy_degrees.iter().map(u32::to_string).collect();
        let mut s = String::new();
        let _ = writeln!(s, "curve           {}  over {}", self.curve, self.field);
        let _ = writeln!(s, "d, e            {}, {}", self.d, self.e);
        let _ = writeln!(s, "syzygy degrees  {}", degrees.join(" "));
        let _ = writeln!(s, "I_eps           <{}>", self.bourbaki_ideal.join(", "));
        let _ = writeln!(
            s,
            "tau             {}{}  {}",
            self.tau.global,
            if self.tau.complete {
                ""
            } else {
                " (points not all rational)"
            },
            table(&self.tau.table)
        );
        let _ = writeln!(
            s,
            "Bour            {}  formula {}, local sum {}, residual {}",
            self.bour.hilbert, self.bour.formula, self.bour.local_sum, self.bour.residual
        );
        let _ = writeln!(s, "local degrees   {}", table(&self.local_table));
        let _ = writeln!(s, "class           {}", self.classification);
        let failed: Vec<&str> = self
            .flags
            .iter()
            .filter(|(_, ok)| !**ok)
            .map(|(n, _)| n.as_str())
            .collect();
        if failed.is_empty() {
            let _ = writeln!(s, "checks          all passed");
        } else {
            let _ = writeln!(s, "checks          FAILED: {}", failed.join(", "));
        }
        for (stage, ms) in &self.timings_ms {
            let _ = writeln!(s, "time {stage:<11}{ms:.3} ms");
        }
        s
    }
}
