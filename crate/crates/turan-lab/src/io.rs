//! File formats: hypergraph JSON, verification report JSON/CSV. All
//! writes go through a temp-file-then-rename step so readers never see a
//! half-written file.

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::verify::{ClaimStatus, VerificationReport};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// On-disk hypergraph shape: `{"n": .., "r": .., "edges": [[..], ..]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub r: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&UniformHypergraph> for HypergraphJson {
    fn from(h: &UniformHypergraph) -> Self {
        HypergraphJson { n: h.n(), r: h.r(), edges: h.edge_lists() }
    }
}

impl TryFrom<HypergraphJson> for UniformHypergraph {
    type Error = Error;

    fn try_from(j: HypergraphJson) -> Result<UniformHypergraph> {
        UniformHypergraph::new(j.n, j.r, &j.edges)
    }
}

/// Replace the file at `path` atomically.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let tmp = dir.join(format!(
        ".{}.tmp-{}",
        path.file_name().map(|f| f.to_string_lossy()).unwrap_or_default(),
        std::process::id()
    ));
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn read_hypergraph(path: &Path) -> Result<UniformHypergraph> {
    let text = std::fs::read_to_string(path)?;
    let parsed: HypergraphJson = serde_json::from_str(&text).map_err(|e| {
        Error::Parse(format!(
            "{}: line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })?;
    UniformHypergraph::try_from(parsed)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn write_hypergraph(h: &UniformHypergraph, path: &Path) -> Result<()> {
    let json = serde_json::to_string_pretty(&HypergraphJson::from(h))
        .map_err(|e| Error::Parse(e.to_string()))?;
    atomic_write(path, json.as_bytes())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

fn status_str(s: ClaimStatus) -> &'static str {
    match s {
        ClaimStatus::Pass => "pass",
        ClaimStatus::Fail => "fail",
        ClaimStatus::SkippedBudget => "skipped-budget",
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// CSV rendering: one row per check, `claim_id,status,expected,got,tolerance`.
pub fn report_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("claim_id,status,expected,got,tolerance\n");
    for report in reports {
        if report.checks.is_empty() {
            out.push_str(&format!(
                "{},{},,,\n",
                csv_escape(&report.claim_id),
                status_str(report.status)
            ));
            continue;
        }
        for check in &report.checks {
            let row_status = if check.pass { status_str(report.status) } else { "fail" };
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                csv_escape(&report.claim_id),
                row_status,
                csv_escape(&check.expected),
                csv_escape(&check.got),
                csv_escape(&check.tolerance),
            ));
        }
    }
    out
}

pub fn write_report(reports: &[VerificationReport], path: &Path, format: ReportFormat) -> Result<()> {
    let bytes = match format {
        ReportFormat::Json => serde_json::to_string_pretty(reports)
            .map_err(|e| Error::Parse(e.to_string()))?
            .into_bytes(),
        ReportFormat::Csv => report_csv(reports).into_bytes(),
    };
    atomic_write(path, &bytes)
}
