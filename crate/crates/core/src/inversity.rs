//! Edge-endpoint moments, the inversity correlation, and the gap identities
//! that tie the global and local paradox deltas together.
//!
//! For every paradox family the difference delta_g - delta_l factors exactly
//! as rho * sigma_D * sigma_ID * k_bar, where the moments are taken over
//! edge incidences: each incidence pairs the measured value at one endpoint
//! with the inverse walked degree of the other. The identity holds when both
//! deltas are computed over the nodes with nonzero walked degree, with
//! k_bar = 2|E|/n over those nodes (|E|/n in the directed case, where every
//! arc is a single incidence).
//!
//! ```
//! use signed_paradox::graph::{make_view, Sign, SignedDigraph, ViewMode};
//! use signed_paradox::inversity::{gap_check_same, GapOutcome};
//!
//! // path of three nodes: the gap between the global and local deltas
//! // factors exactly through the inversity correlation
//! let g = SignedDigraph::from_arcs(3, [], [(0, 1), (1, 0), (1, 2), (2, 1)])?;
//! let v = make_view(&g, Sign::Negative, ViewMode::Symmetrized, false)?;
//! match gap_check_same(&v)? {
//!     GapOutcome::Checked(c) => {
//!         assert!((c.lhs - 1.0 / 6.0).abs() < 1e-12);
//!         assert!(c.residual.abs() < 1e-12);
//!     }
//!     GapOutcome::NotApplicable { .. } => unreachable!("degrees vary"),
//! }
//! # Ok::<(), signed_paradox::error::Error>(())
//! ```

use serde::Serialize;

use crate::error::Result;
use crate::graph::{make_view, GraphView, Sign, SignedDigraph, ViewMode};
use crate::paradox::{
    attr_global, attr_local, directed_attr_global, directed_attr_local, AttributeVector,
    DirectedCase, NodeUniverse, WalkRole,
};

/// A Pearson correlation that may be undefined when one variable is
/// constant (regular graphs, constant attributes, single incidences).
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Correlation {
    Defined { value: f64 },
    Undefined { reason: String },
}

impl Correlation {
    pub fn value(&self) -> Option<f64> {
        match self {
            Correlation::Defined { value } => Some(*value),
            Correlation::Undefined { .. } => None,
        }
    }
}

/// First and second moments of the two edge-incidence variables, their
/// correlation, and the mean walked degree that scales the gap identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeMomentSet {
    /// Mean of the measured value over incidences.
    pub mu_d: f64,
    /// Mean inverse walked degree of the other endpoint over incidences.
    pub mu_id: f64,
    pub sigma_d: f64,
    pub sigma_id: f64,
    pub rho: Correlation,
    /// 2|E| for undirected views, |E| for directed ones.
    pub incidence_count: usize,
    /// Walked-world mean degree over nodes with nonzero walked degree.
    pub mean_walk_degree: f64,
}

/// Shared moment computation over incidence samples `(d, id)`.
fn moments_from_samples(samples: &[(f64, f64)], mean_walk_degree: f64) -> EdgeMomentSet {
    let n = samples.len() as f64;
    let mu_d = samples.iter().map(|s| s.0).sum::<f64>() / n;
    let mu_id = samples.iter().map(|s| s.1).sum::<f64>() / n;
    let mut var_d = 0.0;
    let mut var_id = 0.0;
    let mut cov = 0.0;
    for &(d, id) in samples {
        var_d += (d - mu_d) * (d - mu_d);
        var_id += (id - mu_id) * (id - mu_id);
        cov += (d - mu_d) * (id - mu_id);
    }
    var_d /= n;
    var_id /= n;
    cov /= n;
    let sigma_d = var_d.sqrt();
    let sigma_id = var_id.sqrt();
    let rho = if sigma_d == 0.0 || sigma_id == 0.0 {
        let which = if sigma_d == 0.0 { "measured value" } else { "inverse walked degree" };
        Correlation::Undefined { reason: format!("{which} is constant over incidences") }
    } else {
        Correlation::Defined { value: (cov / (sigma_d * sigma_id)).clamp(-1.0, 1.0) }
    };
    EdgeMomentSet {
        mu_d,
        mu_id,
        sigma_d,
        sigma_id,
        rho,
        incidence_count: samples.len(),
        mean_walk_degree,
    }
}

/// Moments over the ordered incidences of an undirected view: each edge
/// {i, j} contributes (x_i, 1/k_j) and (x_j, 1/k_i).
pub fn incidence_moments(v: &GraphView, x: &[f64]) -> EdgeMomentSet {
    assert!(!v.is_directed());
    assert_eq!(x.len(), v.n());
    let k = v.undirected_degrees();
    let mut samples = Vec::with_capacity(2 * v.edge_count());
    let mut eligible = 0usize;
    for i in 0..v.n() {
        if k[i] > 0 {
            eligible += 1;
        }
        for &j in v.neighbors(i) {
            samples.push((x[i], 1.0 / k[j as usize] as f64));
        }
    }
    let k_bar = 2.0 * v.edge_count() as f64 / eligible as f64;
    moments_from_samples(&samples, k_bar)
}

/// Moments over the arcs of a directed view. Each arc pairs the measured
/// value of the endpoint reached by walking `walk_role` with the inverse
/// walked degree of the endpoint doing the walking.
pub fn directed_incidence_moments(v: &GraphView, walk_role: WalkRole, x: &[f64]) -> EdgeMomentSet {
    assert!(v.is_directed());
    assert_eq!(x.len(), v.n());
    let kw = match walk_role {
        WalkRole::In => v.in_degrees(),
        WalkRole::Out => v.out_degrees(),
    };
    let mut samples = Vec::with_capacity(v.edge_count());
    for u in 0..v.n() {
        for &t in v.neighbors(u) {
            let t = t as usize;
            // walking In: arc u -> t is seen from t, reaching u
            let (reached, walker) = match walk_role {
                WalkRole::In => (u, t),
                WalkRole::Out => (t, u),
            };
            samples.push((x[reached], 1.0 / kw[walker] as f64));
        }
    }
    let eligible = kw.iter().filter(|&&d| d > 0).count();
    let k_bar = v.edge_count() as f64 / eligible as f64;
    moments_from_samples(&samples, k_bar)
}

/// Same-world inversity: correlation between one endpoint's degree and the
/// other endpoint's inverse degree over all ordered incidences.
pub fn inversity_same(v: &GraphView) -> Correlation {
    let x: Vec<f64> = v.undirected_degrees().iter().map(|&d| d as f64).collect();
    incidence_moments(v, &x).rho
}

/// Generalized inversity of an attribute against inverse degree.
pub fn inversity_attribute(v: &GraphView, attr: &AttributeVector) -> Result<EdgeMomentSet> {
    let x = attr.view_values(v)?;
    Ok(incidence_moments(v, &x))
}

/// Degrees of the other sign world, indexed by walk-view node. Counted
/// degrees come from the full graph, not the walk view's retained set.
fn other_sign_counts(g: &SignedDigraph, walk_sign: Sign, mode: ViewMode, v_walk: &GraphView) -> Result<Vec<f64>> {
    let v_count = make_view(g, walk_sign.other(), mode, false)?;
    let k_count = v_count.undirected_degrees();
    Ok(v_walk.retained().iter().map(|&orig| k_count[orig as usize] as f64).collect())
}

/// Mixed-world inversity: walk one sign's edges, measure the other sign's
/// degree at the reached endpoint.
pub fn inversity_mixed(g: &SignedDigraph, walk_sign: Sign, mode: ViewMode) -> Result<EdgeMomentSet> {
    let v_walk = make_view(g, walk_sign, mode, false)?;
    let x = other_sign_counts(g, walk_sign, mode, &v_walk)?;
    Ok(incidence_moments(&v_walk, &x))
}

/// The directed inversity matching one of the four directed paradox cases.
pub fn inversity_directed(g: &SignedDigraph, sign: Sign, case: DirectedCase) -> Result<EdgeMomentSet> {
    let v = make_view(g, sign, ViewMode::Directed, false)?;
    let x: Vec<f64> = match case.counted_role() {
        WalkRole::In => v.in_degrees(),
        WalkRole::Out => v.out_degrees(),
    }
    .iter()
    .map(|&d| d as f64)
    .collect();
    Ok(directed_incidence_moments(&v, case.walk_role(), &x))
}

/// Both sides of a verified gap identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapCheck {
    /// delta_g - delta_l over the eligible node universe.
    pub lhs: f64,
    /// rho * sigma_D * sigma_ID * k_bar.
    pub rhs: f64,
    pub residual: f64,
}

/// Result of a gap identity check: either both sides, or the reason the
/// identity does not apply (degenerate correlation), along with the lhs
/// which is still well defined.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum GapOutcome {
    Checked(GapCheck),
    NotApplicable { reason: String, lhs: f64 },
}

impl GapOutcome {
    pub fn residual(&self) -> Option<f64> {
        match self {
            GapOutcome::Checked(c) => Some(c.residual),
            GapOutcome::NotApplicable { .. } => None,
        }
    }
}

fn assemble(lhs: f64, moments: &EdgeMomentSet) -> GapOutcome {
    match &moments.rho {
        Correlation::Undefined { reason } => {
            GapOutcome::NotApplicable { reason: reason.clone(), lhs }
        }
        Correlation::Defined { value } => {
            let rhs =
                value * moments.sigma_d * moments.sigma_id * moments.mean_walk_degree;
            GapOutcome::Checked(GapCheck { lhs, rhs, residual: lhs - rhs })
        }
    }
}

/// Undirected gap: restrict to non-isolated nodes, compute both deltas on
/// the measured vector there, and compare against the moment product.
fn gap_undirected(v: &GraphView, x: &[f64]) -> Result<GapOutcome> {
    let (v_active, x_active): (GraphView, Vec<f64>) =
        if v.undirected_degrees().iter().any(|&d| d == 0) {
            let keep: Vec<bool> = v.undirected_degrees().iter().map(|&d| d > 0).collect();
            let kept: Vec<f64> = x
                .iter()
                .zip(&keep)
                .filter_map(|(&val, &k)| k.then_some(val))
                .collect();
            (v.induced(&keep)?, kept)
        } else {
            (v.clone(), x.to_vec())
        };
    let delta_g = attr_global(&v_active, &x_active);
    let (delta_l, _, _) = attr_local(&v_active, &x_active);
    let moments = incidence_moments(&v_active, &x_active);
    Ok(assemble(delta_g - delta_l, &moments))
}

pub fn gap_check_same(v: &GraphView) -> Result<GapOutcome> {
    let x: Vec<f64> = v.undirected_degrees().iter().map(|&d| d as f64).collect();
    gap_undirected(v, &x)
}

pub fn gap_check_attribute(v: &GraphView, attr: &AttributeVector) -> Result<GapOutcome> {
    let x = attr.view_values(v)?;
    gap_undirected(v, &x)
}

pub fn gap_check_mixed(g: &SignedDigraph, walk_sign: Sign, mode: ViewMode) -> Result<GapOutcome> {
    let v_walk = make_view(g, walk_sign, mode, false)?;
    let x = other_sign_counts(g, walk_sign, mode, &v_walk)?;
    gap_undirected(&v_walk, &x)
}

pub fn gap_check_directed(g: &SignedDigraph, sign: Sign, case: DirectedCase) -> Result<GapOutcome> {
    let v = make_view(g, sign, ViewMode::Directed, false)?;
    let x: Vec<f64> = match case.counted_role() {
        WalkRole::In => v.in_degrees(),
        WalkRole::Out => v.out_degrees(),
    }
    .iter()
    .map(|&d| d as f64)
    .collect();
    let delta_g = directed_attr_global(&v, case.walk_role(), &x, NodeUniverse::WalkedNonzero)?;
    let (delta_l, _, _) = directed_attr_local(&v, case.walk_role(), &x)?;
    let moments = directed_incidence_moments(&v, case.walk_role(), &x);
    Ok(assemble(delta_g - delta_l, &moments))
}
