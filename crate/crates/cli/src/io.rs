//! Edge-list and attribute-table parsing, and edge-list serialization.
//!
//! Edge lists are UTF-8, comma- or tab-delimited, with a mandatory
//! `src,dst,sign` header and sign tokens `+1`, `1`, or `-1`. Node names are
//! arbitrary strings, mapped to dense indices in order of first appearance
//! and kept as labels. Attribute tables use a `node_id,<names...>` header;
//! empty cells mark nodes without a value for that column.

use std::collections::BTreeMap;
use std::path::Path;

use signed_paradox::graph::{Sign, SignedDigraph};
use signed_paradox::paradox::AttributeVector;

use crate::error::{CliError, Result};

/// Parse outcome: the graph plus anything worth warning about.
#[derive(Debug)]
pub struct LoadedGraph {
    pub graph: SignedDigraph,
    /// Count of rows dropped because an identical row appeared earlier.
    pub duplicate_rows: usize,
}

fn detect_delimiter(path: &Path) -> Result<u8> {
    let text = std::fs::read_to_string(path)?;
    let first = text.lines().next().unwrap_or("");
    Ok(if first.contains('\t') { b'\t' } else { b',' })
}

fn structural(path: &Path, line: usize, message: impl Into<String>) -> CliError {
    CliError::Structural {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

pub fn load_edges(path: &Path) -> Result<LoadedGraph> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(detect_delimiter(path)?)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::BadInput {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;

    let headers = reader
        .headers()
        .map_err(|e| structural(path, 1, e.to_string()))?
        .clone();
    let expected = ["src", "dst", "sign"];
    if headers.len() != 3 || !headers.iter().zip(expected).all(|(h, e)| h == e) {
        return Err(structural(path, 1, "header must be exactly `src,dst,sign`"));
    }

    let mut index: BTreeMap<String, u32> = BTreeMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut arcs: Vec<(Sign, u32, u32)> = Vec::new();
    let mut seen: std::collections::BTreeSet<(u8, u32, u32)> = std::collections::BTreeSet::new();
    let mut duplicate_rows = 0usize;

    for (i, record) in reader.records().enumerate() {
        let line = i + 2; // header is line 1
        let record = record.map_err(|e| structural(path, line, e.to_string()))?;
        if record.len() != 3 {
            return Err(structural(path, line, format!("expected 3 fields, got {}", record.len())));
        }
        let sign = match &record[2] {
            "+1" | "1" => Sign::Positive,
            "-1" => Sign::Negative,
            other => {
                return Err(structural(
                    path,
                    line,
                    format!("bad sign token `{other}` (expected +1, 1, or -1)"),
                ))
            }
        };
        let mut id = |name: &str| -> u32 {
            *index.entry(name.to_string()).or_insert_with(|| {
                labels.push(name.to_string());
                labels.len() as u32 - 1
            })
        };
        let u = id(&record[0]);
        let v = id(&record[1]);
        if u == v {
            return Err(structural(path, line, format!("self-loop on `{}`", &record[0])));
        }
        let key = (matches!(sign, Sign::Negative) as u8, u, v);
        if !seen.insert(key) {
            duplicate_rows += 1;
            continue;
        }
        arcs.push((sign, u, v));
    }

    let mut graph = SignedDigraph::new(labels.len());
    graph.set_labels(labels);
    for (sign, u, v) in arcs {
        graph
            .add_arc(sign, u, v)
            .map_err(|e| CliError::core(path.display().to_string(), e))?;
    }
    Ok(LoadedGraph { graph, duplicate_rows })
}

/// One attribute column with bookkeeping about coverage.
#[derive(Debug)]
pub struct LoadedAttribute {
    pub attribute: AttributeVector,
    /// Graph nodes without a value in this column.
    pub missing_nodes: usize,
}

/// Reads the attribute table against an already-loaded graph's label map.
/// Unknown node ids and non-numeric cells are structural errors; empty
/// cells mark the node as not covered by that column.
pub fn load_attributes(path: &Path, graph: &SignedDigraph) -> Result<Vec<LoadedAttribute>> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(detect_delimiter(path)?)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::BadInput {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;

    let headers = reader
        .headers()
        .map_err(|e| structural(path, 1, e.to_string()))?
        .clone();
    if headers.len() < 2 || &headers[0] != "node_id" {
        return Err(structural(path, 1, "header must be `node_id,<attribute names...>`"));
    }
    let names: Vec<String> = headers.iter().skip(1).map(str::to_string).collect();

    let index: BTreeMap<String, u32> = match graph.labels() {
        Some(labels) => labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u32))
            .collect(),
        None => (0..graph.n()).map(|i| (i.to_string(), i as u32)).collect(),
    };

    let mut columns: Vec<Vec<Option<f64>>> = vec![vec![None; graph.n()]; names.len()];
    let mut any_rows = false;
    for (i, record) in reader.records().enumerate() {
        let line = i + 2;
        any_rows = true;
        let record = record.map_err(|e| structural(path, line, e.to_string()))?;
        if record.len() != names.len() + 1 {
            return Err(structural(
                path,
                line,
                format!("expected {} fields, got {}", names.len() + 1, record.len()),
            ));
        }
        let node = *index.get(&record[0]).ok_or_else(|| {
            structural(path, line, format!("unknown node id `{}`", &record[0]))
        })?;
        for (c, cell) in record.iter().skip(1).enumerate() {
            if cell.is_empty() {
                continue;
            }
            let value: f64 = cell.parse().map_err(|_| {
                structural(
                    path,
                    line,
                    format!("column `{}`: non-numeric cell `{cell}`", names[c]),
                )
            })?;
            columns[c][node as usize] = Some(value);
        }
    }
    if !any_rows {
        return Err(structural(path, 2, "attribute table has no data rows"));
    }

    Ok(names
        .into_iter()
        .zip(columns)
        .map(|(name, values)| {
            let missing_nodes = values.iter().filter(|v| v.is_none()).count();
            LoadedAttribute { attribute: AttributeVector::new(name, values), missing_nodes }
        })
        .collect())
}

/// Writes a graph back out in the edge-list format `load_edges` reads.
pub fn write_edges(path: &Path, graph: &SignedDigraph) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["src", "dst", "sign"])?;
    for (sign, token) in [(Sign::Positive, "+1"), (Sign::Negative, "-1")] {
        for (u, v) in graph.arcs(sign) {
            w.write_record([graph.label(u), graph.label(v), token.to_string()])?;
        }
    }
    w.flush()?;
    Ok(())
}
