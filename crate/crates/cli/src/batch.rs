//! Independent analyses of the curves in a JSON-lines file.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::report::ReportDocument;
use crate::spec::CurveSpec;
use crate::{analyze_document, CliError, Options, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Ok,
    /// The report disagrees with the line's `expect` values.
    Mismatch,
    /// Some consistency flag of the report failed.
    Inconsistent,
    /// The line could not be parsed or its curve was rejected.
    Failed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Mismatch => "MISMATCH",
            Status::Inconsistent => "INCONSISTENT",
            Status::Failed => "FAILED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub line: usize,
    pub label: String,
    pub d: Option<u32>,
    pub e: Option<u32>,
    pub tau: Option<u64>,
    pub bour: Option<u64>,
    pub classification: Option<String>,
    pub status: Status,
    pub message: Option<String>,
    pub report: Option<String>,
}

impl SummaryRow {
    fn failed(line: usize, label: String, message: String) -> Self {
        SummaryRow {
            line,
            label,
            d: None,
            e: None,
            tau: None,
            bour: None,
            classification: None,
            status: Status::Failed,
            message: Some(message),
            report: None,
        }
    }
}

/// Writes through a temporary file in the same directory, so readers see
/// either nothing or the whole file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, contents).map_err(|e| CliError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))
}

fn file_name(line: usize, label: &str) -> String {
    let clean: String = label
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect();
    format!("{line:04}-{clean}.json")
}

fn mismatches(spec: &CurveSpec, doc: &ReportDocument) -> Vec<String> {
    let Some(exp) = &spec.expect else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if let Some(b) = exp.bour.filter(|&b| b != doc.bour.hilbert) {
        out.push(format!("bour {} != expected {b}", doc.bour.hilbert));
    }
    if let Some(t) = exp.tau.filter(|&t| t != doc.tau.global) {
        out.push(format!("tau {} != expected {t}", doc.tau.global));
    }
    if let Some(c) = &exp.classification {
        let tag = doc.classification.split('(').next().unwrap_or_default();
        if tag != c {
            out.push(format!(
                "classification {} != expected {c}",
                doc.classification
            ));
        }
    }
    out
}

fn process(line: usize, text: &str, out_dir: &Path, opts: &Options) -> SummaryRow {
    let fallback = format!("line-{line}");
    let spec: CurveSpec = match serde_json::from_str(text) {
        Ok(s) => s,
        Err(e) => return SummaryRow::failed(line, fallback, format!("malformed line: {e}")),
    };
    let label = spec.label.clone().unwrap_or(fallback);
    let analysis = spec.check().and_then(|()| {
        let opts = Options {
            field: spec.field_or(opts.field)?,
            ..opts.clone()
        };
        analyze_document(&spec.curve, &opts)
    });
    let doc = match analysis {
        Ok((_, doc)) => doc,
        Err(e) => return SummaryRow::failed(line, label, e.to_string()),
    };
    let name = file_name(line, &label);
    if let Err(e) = write_atomic(&out_dir.join(&name), &doc.to_json()) {
        return SummaryRow::failed(line, label, e.to_string());
    }
    let wrong = mismatches(&spec, &doc);
    let (status, message) = if !wrong.is_empty() {
        (Status::Mismatch, Some(wrong.join("; ")))
    } else if !doc.consistent() {
        (
            Status::Inconsistent,
            Some("consistency flags failed".to_string()),
        )
    } else {
        (Status::Ok, None)
    };
    SummaryRow {
        line,
        label,
        d: Some(doc.d),
        e: Some(doc.e),
        tau: Some(doc.tau.global),
        bour: Some(doc.bour.hilbert),
        classification: Some(doc.classification.clone()),
        status,
        message,
        report: Some(name),
    }
}

/// Analyzes every non-blank line of `input` concurrently, writing one
/// report per curve and `summary.json` into `out_dir`.
pub fn run_batch(input: &Path, out_dir: &Path, opts: &Options) -> Result<Vec<SummaryRow>> {
    let text = fs::read_to_string(input).map_err(|e| CliError::io(input, e))?;
    fs::create_dir_all(out_dir).map_err(|e| CliError::io(out_dir, e))?;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    let rows: Vec<SummaryRow> = lines
        .par_iter()
        .map(|&(i, l)| process(i, l, out_dir, opts))
        .collect();
    let summary = serde_json::to_string_pretty(&rows)?;
    write_atomic(&summary_path(out_dir), &summary)?;
    Ok(rows)
}

pub fn summary_path(out_dir: &Path) -> PathBuf {
    out_dir.join("summary.json")
}

/// 0 when every curve is fine, 1 when some line failed, 2 when some report
/// is inconsistent or contradicts its expectations.
pub fn exit_code(rows: &[SummaryRow]) -> u8 {
    match rows.iter().map(|r| r.status).max() {
        None | Some(Status::Ok) => 0,
        Some(Status::Failed) => 1,
        Some(_) => 2,
    }
}

pub fn render(rows: &[SummaryRow]) -> String {
    let cell = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
    let mut out = format!(
        "{:<5} {:<20} {:>3} {:>3} {:>4} {:>5} {:<12} {}\n",
        "line", "label", "d", "e", "tau", "Bour", "class", "status"
    );
    for r in rows {
        out.push_str(&format!(
            "{:<5} {:<20} {:>3} {:>3} {:>4} {:>5} {:<12} {}{}\n",
            r.line,
            r.label,
            cell(r.d.map(|v| v.to_string())),
            cell(r.e.map(|v| v.to_string())),
            cell(r.tau.map(|v| v.to_string())),
            cell(r.bour.map(|v| v.to_string())),
            cell(r.classification.clone()),
            r.status.as_str(),
            r.message
                .as_ref()
                .map(|m| format!("  {m}"))
                .unwrap_or_default()
        ));
    }
    out
}
