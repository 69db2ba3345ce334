//! Verification mode: recomputes every delta with the slow loop-based
//! implementations and reports residuals against the fast paths, plus both
//! sides of every applicable gap identity.

use serde::Serialize;
use signed_paradox::graph::{make_view, Sign, SignedDigraph, ViewMode};
use signed_paradox::inversity::{
    gap_check_directed, gap_check_mixed, gap_check_same, GapOutcome,
};
use signed_paradox::naive;
use signed_paradox::paradox::*;

use crate::error::{CliError, Result};

pub const ORACLE_NODE_CAP: usize = 60;
pub const ORACLE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Serialize)]
pub struct ResidualRow {
    pub dataset: String,
    pub quantity: String,
    pub fast: f64,
    pub reference: f64,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub tolerance: f64,
    pub rows: Vec<ResidualRow>,
    pub failures: usize,
}

fn row(dataset: &str, quantity: String, fast: f64, reference: f64) -> ResidualRow {
    let residual = fast - reference;
    ResidualRow {
        dataset: dataset.to_string(),
        quantity,
        fast,
        reference,
        residual,
        pass: residual.abs() <= ORACLE_TOLERANCE * fast.abs().max(1.0),
    }
}

/// A deterministic pseudo-attribute so generalized variants are always
/// exercised even without user attributes.
fn synthetic_attribute(n: usize) -> AttributeVector {
    let values: Vec<f64> = (0..n).map(|i| ((i * 7 + 3) % 11) as f64).collect();
    AttributeVector::total("synthetic", values)
}

/// Cross-checks every variant family on one graph. Rows are appended in a
/// deterministic order.
pub fn check_graph(dataset: &str, g: &SignedDigraph, rows: &mut Vec<ResidualRow>) -> Result<()> {
    if g.n() > ORACLE_NODE_CAP {
        return Err(CliError::OracleSizeCap { n: g.n(), cap: ORACLE_NODE_CAP });
    }
    let attr = synthetic_attribute(g.n());

    for sign in [Sign::Negative, Sign::Positive] {
        for mode in [ViewMode::Symmetrized, ViewMode::Reciprocated] {
            let Ok(v) = make_view(g, sign, mode, false) else { continue };
            let tag = |q: &str| format!("{mode}:{sign}:{q}");

            let fast_g = delta_global_same(&v).expect("undirected view");
            rows.push(row(dataset, tag("same:global"), fast_g, naive::global_same(&v)));
            let fast_l = delta_local_same(&v).expect("undirected view").delta_l;
            rows.push(row(dataset, tag("same:local"), fast_l, naive::local_same(&v)));

            let x = attr.view_values(&v).expect("total attribute");
            rows.push(row(
                dataset,
                tag("gen:global"),
                delta_global_generalized(&v, &attr).expect("total attribute"),
                naive::global_attr(&v, &x),
            ));
            rows.push(row(
                dataset,
                tag("gen:local"),
                delta_local_generalized(&v, &attr).expect("total attribute").delta_l,
                naive::local_attr(&v, &x),
            ));

            if let Ok(vc) = make_view(g, sign.other(), mode, false) {
                let counts: Vec<f64> =
                    vc.undirected_degrees().iter().map(|&d| d as f64).collect();
                rows.push(row(
                    dataset,
                    tag("mixed:global"),
                    delta_global_mixed(&v, &counts).expect("undirected view"),
                    naive::global_attr(&v, &counts),
                ));
                rows.push(row(
                    dataset,
                    tag("mixed:local"),
                    delta_local_mixed(&v, &counts).expect("undirected view").delta_l,
                    naive::local_attr(&v, &counts),
                ));
                if let GapOutcome::Checked(c) =
                    gap_check_mixed(g, sign, mode).expect("views exist")
                {
                    rows.push(row(dataset, tag("mixed:gap"), c.lhs, c.rhs));
                }
            }

            for ell in 1..=4u32 {
                let fast = delta_global_higher(&v, ell).expect("order within cap");
                let slow = naive::global_higher(&v, ell)
                    .map_err(|e| CliError::core(dataset.to_string(), e))?;
                rows.push(row(dataset, tag(&format!("higher-l{ell}:global")), fast, slow));
                let fast = delta_local_higher(&v, ell).expect("order within cap").delta_l;
                let slow = naive::local_higher(&v, ell)
                    .map_err(|e| CliError::core(dataset.to_string(), e))?;
                rows.push(row(dataset, tag(&format!("higher-l{ell}:local")), fast, slow));
            }

            if let GapOutcome::Checked(c) = gap_check_same(&v).expect("undirected view") {
                rows.push(row(dataset, tag("same:gap"), c.lhs, c.rhs));
            }
        }

        // directed families
        if let Ok(v) = make_view(g, sign, ViewMode::Directed, false) {
            for case in DirectedCase::ALL {
                let tag = |q: &str| format!("directed:{sign}:{case}:{q}");
                for (universe, label) in [
                    (NodeUniverse::AllNodes, "global-all"),
                    (NodeUniverse::WalkedNonzero, "global-eligible"),
                ] {
                    let fast = delta_directed_view(&v, case, universe)
                        .expect("directed view")
                        .delta_g;
                    rows.push(row(dataset, tag(label), fast, naive::directed_global(&v, case, universe)));
                }
                let fast =
                    delta_directed_view(&v, case, NodeUniverse::AllNodes).expect("directed view");
                rows.push(row(dataset, tag("local"), fast.delta_l, naive::directed_local(&v, case)));
                if let GapOutcome::Checked(c) =
                    gap_check_directed(g, sign, case).expect("directed view")
                {
                    rows.push(row(dataset, tag("gap"), c.lhs, c.rhs));
                }
            }
            // directed generalized, both neighbor roles
            let x = attr.view_values(&v).expect("total attribute");
            for (neighbor, walk_role) in
                [(NeighborRole::Enemy, WalkRole::Out), (NeighborRole::Hater, WalkRole::In)]
            {
                let fast = delta_directed_generalized(
                    g,
                    sign,
                    neighbor,
                    &attr,
                    NodeUniverse::AllNodes,
                )
                .expect("directed view");
                rows.push(row(
                    dataset,
                    format!("directed-gen:{sign}:{neighbor}:global"),
                    fast.delta_g,
                    naive::directed_global_attr(&v, walk_role, &x, NodeUniverse::AllNodes),
                ));
                rows.push(row(
                    dataset,
                    format!("directed-gen:{sign}:{neighbor}:local"),
                    fast.delta_l,
                    naive::directed_local_attr(&v, walk_role, &x),
                ));
            }
        }
    }
    Ok(())
}

/// The full oracle run over the fixture catalog, optional user graphs, and
/// a seeded sweep of random graphs.
pub fn run_oracle(
    user_graphs: &[(String, SignedDigraph)],
    random_sweep: usize,
    seed: u64,
) -> Result<OracleReport> {
    let mut rows = Vec::new();
    for fixture in signed_paradox::generators::reference_fixtures() {
        check_graph(fixture.name, &fixture.graph, &mut rows)?;
    }
    for (name, g) in user_graphs {
        check_graph(name, g, &mut rows)?;
    }
    for i in 0..random_sweep {
        let g = signed_paradox::generators::generate(&signed_paradox::generators::GeneratorSpec {
            kind: signed_paradox::generators::GeneratorKind::ErdosRenyiSigned {
                n: 25,
                p_pos: 0.08,
                p_neg: 0.08,
            },
            seed: seed.wrapping_add(i as u64),
        })
        .map_err(|e| CliError::core("random sweep", e))?;
        check_graph(&format!("random-{i}"), &g, &mut rows)?;
    }
    let failures = rows.iter().filter(|r| !r.pass).count();
    Ok(OracleReport { tolerance: ORACLE_TOLERANCE, rows, failures })
}
