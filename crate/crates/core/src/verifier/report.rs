//! Report emission: the statistics CSV and the JSON reports, each JSON
//! carrying the tool version and configuration hash so any report can
//! be traced back to the invocation that produced it.

use crate::verifier::congruence::CongruenceReport;
use crate::verifier::gamma::GammaTable;
use crate::verifier::run::{StatsRow, ViolationRecord};
use crate::{Error, Result};
use serde::Serialize;
use std::path::Path;

/// Provenance header embedded in every JSON report.
#[derive(Debug, Clone, Serialize)]
pub struct ReportMeta {
    pub version: String,
    pub config_hash: String,
    /// The command line that produced the report, so any report can be
    /// reproduced by rerunning it verbatim.
    pub invocation: String,
}

#[derive(Serialize)]
struct GammaReport<'a> {
    #[serde(flatten)]
    meta: &'a ReportMeta,
    entries: Vec<GammaReportEntry<'a>>,
}

#[derive(Serialize)]
struct GammaReportEntry<'a> {
    key: &'a str,
    value: String,
    provenance: &'a crate::verifier::gamma::Provenance,
}

#[derive(Serialize)]
struct ViolationsReport<'a> {
    #[serde(flatten)]
    meta: &'a ReportMeta,
    violations: &'a [ViolationRecord],
}

#[derive(Serialize)]
struct CongruenceFile<'a> {
    #[serde(flatten)]
    meta: &'a ReportMeta,
    #[serde(flatten)]
    report: &'a CongruenceReport,
}

fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    let text =
        serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

/// Writes the statistics rows as CSV in the published column layout.
pub fn write_table_csv(path: &Path, rows: &[StatsRow]) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::Io(std::io::Error::other(e)))?;
    for row in rows {
        w.serialize(row).map_err(|e| Error::Io(std::io::Error::other(e)))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes the dictionary with per-key provenance.
pub fn write_gamma_json(path: &Path, meta: &ReportMeta, gamma: &GammaTable) -> Result<()> {
    let entries: Vec<GammaReportEntry> = gamma
        .iter()
        .map(|(key, entry)| GammaReportEntry {
            key,
            value: entry.value.to_string(),
            provenance: &entry.provenance,
        })
        .collect();
    write_json(path, &GammaReport { meta, entries })
}

/// Writes the violation list (possibly empty — an empty list is the
/// expected, and meaningful, result).
pub fn write_violations_json(
    path: &Path,
    meta: &ReportMeta,
    violations: &[ViolationRecord],
) -> Result<()> {
    write_json(path, &ViolationsReport { meta, violations })
}

/// Writes a congruence report.
pub fn write_congruence_json(
    path: &Path,
    meta: &ReportMeta,
    report: &CongruenceReport,
) -> Result<()> {
    write_json(path, &CongruenceFile { meta, report })
}
