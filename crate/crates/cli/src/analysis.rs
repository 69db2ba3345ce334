//! Orchestration: runs the full battery of paradox variants, gap checks,
//! and heterogeneity profiles over one graph, or over a directory of edge
//! lists in parallel.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use sha2::{Digest, Sha256};
use signed_paradox::graph::{make_view, validate, GraphView, Sign, SignedDigraph, ViewMode};
use signed_paradox::inversity::{gap_check_attribute, gap_check_directed, gap_check_mixed, gap_check_same};
use signed_paradox::measures::heterogeneity_profile;
use signed_paradox::paradox::*;

use crate::error::{CliError, Result};
use crate::io::{load_attributes, load_edges, LoadedAttribute};
use crate::report::*;

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    pub modes: Vec<ViewMode>,
    pub signs: Vec<Sign>,
    pub include_per_node: bool,
    pub seed: Option<u64>,
    pub with_timestamp: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            modes: vec![ViewMode::Symmetrized, ViewMode::Reciprocated, ViewMode::Directed],
            signs: vec![Sign::Negative, Sign::Positive],
            include_per_node: false,
            seed: None,
            with_timestamp: false,
        }
    }
}

fn now_secs() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn view_or_err(
    g: &SignedDigraph,
    sign: Sign,
    mode: ViewMode,
    dataset: &str,
) -> Result<GraphView> {
    make_view(g, sign, mode, false)
        .map_err(|e| CliError::core(format!("{dataset}: {sign} world, {mode} view"), e))
}

fn push_entry(
    doc: &mut ReportDocument,
    mode: ViewMode,
    universe_n: usize,
    mut report: ParadoxReport,
    include_per_node: bool,
) {
    if !include_per_node {
        report.per_node.clear();
        report.node_ids.clear();
    }
    doc.paradoxes.push(ParadoxEntry { mode, universe_n, report });
}

/// Runs every variant family on one loaded graph.
pub fn run_analysis(
    dataset: &str,
    g: &SignedDigraph,
    attributes: &[LoadedAttribute],
    input_sha256: String,
    opts: &AnalysisOptions,
) -> Result<ReportDocument> {
    let mut doc = ReportDocument {
        schema_version: SCHEMA_VERSION,
        dataset: dataset.to_string(),
        provenance: Provenance {
            input_sha256,
            seed: opts.seed,
            tool_version: TOOL_VERSION.to_string(),
            timestamp: opts.with_timestamp.then(now_secs),
        },
        graph: validate(g),
        warnings: Vec::new(),
        paradoxes: Vec::new(),
        gap_checks: Vec::new(),
        profiles: Vec::new(),
        attribute_table: Vec::new(),
    };

    for &sign in &opts.signs {
        for &mode in &opts.modes {
            if mode == ViewMode::Directed {
                let core_err = |e| CliError::core(format!("{dataset}: {sign} {mode}"), e);
                // the view itself must exist for the requested sign
                view_or_err(g, sign, mode, dataset)?;
                for case in DirectedCase::ALL {
                    let report =
                        delta_directed(g, sign, case, NodeUniverse::AllNodes).map_err(core_err)?;
                    push_entry(&mut doc, mode, g.n(), report, opts.include_per_node);
                    let outcome = gap_check_directed(g, sign, case).map_err(core_err)?;
                    doc.gap_checks.push(GapEntry {
                        mode,
                        label: format!("dir:{sign}:{case}"),
                        outcome,
                    });
                }
                continue;
            }

            let v = view_or_err(g, sign, mode, dataset)?;
            let core_err = |e| CliError::core(format!("{dataset}: {sign} {mode}"), e);

            push_entry(
                &mut doc,
                mode,
                v.n(),
                delta_local_same(&v).map_err(core_err)?,
                opts.include_per_node,
            );
            for ell in [2u32, 3] {
                push_entry(
                    &mut doc,
                    mode,
                    v.n(),
                    delta_local_higher(&v, ell).map_err(core_err)?,
                    opts.include_per_node,
                );
            }
            doc.gap_checks.push(GapEntry {
                mode,
                label: format!("same:{sign}"),
                outcome: gap_check_same(&v).map_err(core_err)?,
            });

            // mixed world: walk this sign, count the other; skip quietly
            // when the other world is missing
            match make_view(g, sign.other(), mode, false) {
                Ok(vc) => {
                    let counts: Vec<f64> =
                        vc.undirected_degrees().iter().map(|&d| d as f64).collect();
                    push_entry(
                        &mut doc,
                        mode,
                        v.n(),
                        delta_local_mixed(&v, &counts).map_err(core_err)?,
                        opts.include_per_node,
                    );
                    doc.gap_checks.push(GapEntry {
                        mode,
                        label: format!("mixed:walk-{sign}"),
                        outcome: gap_check_mixed(g, sign, mode).map_err(core_err)?,
                    });
                }
                Err(_) => doc.warnings.push(format!(
                    "{mode}: mixed-world variants skipped, {} world is empty",
                    sign.other()
                )),
            }

            match heterogeneity_profile(g, sign, mode) {
                Ok(profile) => doc.profiles.push(ProfileEntry { sign, mode, profile }),
                Err(e) => doc
                    .warnings
                    .push(format!("{sign} {mode}: measure battery skipped ({e})")),
            }

            for loaded in attributes {
                let keep = loaded.attribute.coverage(&v);
                let excluded = keep.iter().filter(|&&k| !k).count();
                let covered = if excluded == 0 {
                    v.clone()
                } else {
                    match v.induced(&keep) {
                        Ok(view) => view,
                        Err(_) => {
                            doc.warnings.push(format!(
                                "{sign} {mode}: attribute `{}` leaves no edges",
                                loaded.attribute.name
                            ));
                            continue;
                        }
                    }
                };
                let report =
                    delta_local_generalized(&covered, &loaded.attribute).map_err(core_err)?;
                doc.attribute_table.push(AttributeRow {
                    attribute: loaded.attribute.name.clone(),
                    sign,
                    mode,
                    delta_g: report.delta_g,
                    delta_l: report.delta_l,
                    eligible_count: report.eligible_count,
                    excluded_nodes: excluded,
                });
                doc.gap_checks.push(GapEntry {
                    mode,
                    label: format!("gen:{sign}:{}", loaded.attribute.name),
                    outcome: gap_check_attribute(&covered, &loaded.attribute)
                        .map_err(core_err)?,
                });
                push_entry(&mut doc, mode, covered.n(), report, opts.include_per_node);
            }
        }
    }

    Ok(doc)
}

pub fn sha256_file(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path)?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

/// Loads one edge list (and optional attribute table) and analyzes it.
pub fn analyze_file(
    input: &Path,
    attributes_path: Option<&Path>,
    opts: &AnalysisOptions,
) -> Result<ReportDocument> {
    let loaded = load_edges(input)?;
    let attrs = match attributes_path {
        Some(p) => load_attributes(p, &loaded.graph)?,
        None => Vec::new(),
    };
    let dataset = input
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| input.display().to_string());
    let mut doc = run_analysis(&dataset, &loaded.graph, &attrs, sha256_file(input)?, opts)?;
    if loaded.duplicate_rows > 0 {
        doc.warnings.push(format!("{} duplicate edge rows collapsed", loaded.duplicate_rows));
    }
    for a in &attrs {
        if a.missing_nodes > 0 {
            doc.warnings.push(format!(
                "attribute `{}`: {} nodes without a value excluded",
                a.attribute.name, a.missing_nodes
            ));
        }
    }
    Ok(doc)
}

/// Batch mode: analyze every edge list in a directory (sorted order),
/// write one document per input, and return the combined delta rows.
pub fn analyze_directory(
    dir: &Path,
    out_dir: &Path,
    attributes_path: Option<&Path>,
    opts: &AnalysisOptions,
) -> Result<Vec<DeltaRow>> {
    let mut inputs: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| {
            p.extension()
                .map(|x| x == "csv" || x == "tsv" || x == "edges")
                .unwrap_or(false)
        })
        .collect();
    inputs.sort();
    if inputs.is_empty() {
        return Err(CliError::BadInput {
            path: dir.display().to_string(),
            message: "no .csv/.tsv/.edges files found".to_string(),
        });
    }
    std::fs::create_dir_all(out_dir)?;

    let results: Vec<Result<Vec<DeltaRow>>> = inputs
        .par_iter()
        .map(|input| {
            let doc = analyze_file(input, attributes_path, opts)?;
            let out = out_dir.join(format!("{}.json", doc.dataset));
            doc.write_json(&out)?;
            Ok(doc.delta_rows())
        })
        .collect();

    let mut rows = Vec::new();
    for r in results {
        rows.extend(r?);
    }
    Ok(rows)
}
