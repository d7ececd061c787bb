//! Computed against expected Bourbaki degrees for the built-in corpus.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use bourbaki_core::bourbaki::saito_check;

use crate::corpus::{builtin_corpus, free_family_thetas, CorpusCurve};
use crate::{run_analysis, Options, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub curve: String,
    pub expected: u64,
    pub hilbert: u64,
    pub formula: i64,
    pub local_sum: u64,
    pub residual: u64,
    pub classification: String,
    /// Saito's criterion on the two known syzygies, for the free family.
    pub saito: Option<bool>,
    pub ok: bool,
}

fn row(c: &CorpusCurve, opts: &Options) -> Result<TableRow> {
    let r = run_analysis(&c.curve, opts)?;
    let saito = match c.free_parameter {
        Some(a) => {
            let (t1, t2) = free_family_thetas(a, opts.field);
            Some(saito_check(&r.curve, &t1, &t2)?)
        }
        None => None,
    };
    let ok = r.bour_hilbert == c.bour
        && r.bour_formula == c.bour as i64
        && r.bour_local_sum() + r.residual() == c.bour
        && r.flags.all_ok()
        && saito != Some(false);
    Ok(TableRow {
        label: c.label.clone(),
        curve: r.curve.polynomial().to_string(),
        expected: c.bour,
        hilbert: r.bour_hilbert,
        formula: r.bour_formula,
        local_sum: r.bour_local_sum(),
        residual: r.residual(),
        classification: r.classification.to_string(),
        saito,
        ok,
    })
}

/// One row per corpus curve, in corpus order.
pub fn degree_table(opts: &Options) -> Result<Vec<TableRow>> {
    builtin_corpus().par_iter().map(|c| row(c, opts)).collect()
}

pub fn render(rows: &[TableRow]) -> String {
    let mut out = format!(
        "{:<16} {:>8} {:>8} {:>8} {:>10} {:<12} {:<6} {}\n",
        "curve", "expected", "hilbert", "formula", "local+res", "class", "saito", "status"
    );
    for r in rows {
        let saito = r.saito.map_or("-", |s| if s { "yes" } else { "no" });
        out.push_str(&format!(
            "{:<16} {:>8} {:>8} {:>8} {:>10} {:<12} {:<6} {}\n",
            r.label,
            r.expected,
            r.hilbert,
            r.formula,
            format!("{}+{}", r.local_sum, r.residual),
            r.classification,
            saito,
            if r.ok { "ok" } else { "MISMATCH" }
        ));
    }
    out
}
