//! The structured analysis document and its flat CSV export.

use std::path::Path;

use serde::Serialize;
use signed_paradox::graph::{Diagnostics, Sign, ViewMode};
use signed_paradox::inversity::GapOutcome;
use signed_paradox::measures::HeterogeneityProfile;
use signed_paradox::paradox::ParadoxReport;

use crate::error::Result;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub input_sha256: String,
    pub seed: Option<u64>,
    pub tool_version: String,
    /// Unix seconds; omitted when the run asks for reproducible output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParadoxEntry {
    pub mode: ViewMode,
    /// Size of the node universe used by the global delta.
    pub universe_n: usize,
    #[serde(flatten)]
    pub report: ParadoxReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct GapEntry {
    pub mode: ViewMode,
    pub label: String,
    pub outcome: GapOutcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileEntry {
    pub sign: Sign,
    pub mode: ViewMode,
    pub profile: HeterogeneityProfile,
}

/// One row of the generalized-paradox table: attribute against topology.
#[derive(Debug, Clone, Serialize)]
pub struct AttributeRow {
    pub attribute: String,
    pub sign: Sign,
    pub mode: ViewMode,
    pub delta_g: f64,
    pub delta_l: f64,
    pub eligible_count: usize,
    /// View nodes dropped because the attribute has no value there.
    pub excluded_nodes: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub dataset: String,
    pub provenance: Provenance,
    pub graph: Diagnostics,
    pub warnings: Vec<String>,
    pub paradoxes: Vec<ParadoxEntry>,
    pub gap_checks: Vec<GapEntry>,
    pub profiles: Vec<ProfileEntry>,
    pub attribute_table: Vec<AttributeRow>,
}

impl ReportDocument {
    pub fn write_json(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }

    /// Flat rows for the combined delta CSV.
    pub fn delta_rows(&self) -> Vec<DeltaRow> {
        let mut rows = Vec::new();
        for entry in &self.paradoxes {
            let variant = format!("{}:{}", entry.mode, entry.report.variant);
            rows.push(DeltaRow {
                dataset: self.dataset.clone(),
                variant: variant.clone(),
                scope: "global",
                delta: entry.report.delta_g,
                eligible_n: entry.universe_n,
            });
            rows.push(DeltaRow {
                dataset: self.dataset.clone(),
                variant,
                scope: "local",
                delta: entry.report.delta_l,
                eligible_n: entry.report.eligible_count,
            });
        }
        rows
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DeltaRow {
    pub dataset: String,
    pub variant: String,
    pub scope: &'static str,
    pub delta: f64,
    pub eligible_n: usize,
}

/// Writes the `dataset,variant,scope,delta,eligible_n` table, sorted for
/// deterministic output.
pub fn write_delta_csv(path: &Path, rows: &mut Vec<DeltaRow>) -> Result<()> {
    rows.sort_by(|a, b| {
        (&a.dataset, &a.variant, a.scope).cmp(&(&b.dataset, &b.variant, b.scope))
    });
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["dataset", "variant", "scope", "delta", "eligible_n"])?;
    for r in rows {
        w.write_record([
            r.dataset.as_str(),
            r.variant.as_str(),
            r.scope,
            &format!("{}", r.delta),
            &r.eligible_n.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
