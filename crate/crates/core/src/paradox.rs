//! Global and local paradox deltas for every variant family.
//!
//! The global delta compares the mean of a measured quantity over nodes with
//! its mean over random edge endpoints; the local delta averages per-node
//! differences between one's own value and the mean value of one's
//! neighbors. Same-world, mixed-world, generalized-attribute, higher-order,
//! and directed families all reduce to a small set of primitives: an
//! attribute-weighted comparison on an undirected view, and its directed
//! analogue parameterized by which arc direction is walked.
//!
//! Pure-count quantities (degree sums, walk counts) accumulate in integers;
//! division happens once at the end.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{GraphView, Sign, ViewMode};

/// Which arc direction is walked to reach a neighbor in a directed world.
/// `In` walks to in-neighbors (haters/likers), `Out` to out-neighbors
/// (enemies/friends).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkRole {
    In,
    Out,
}

/// The four directed same-world cases: `InWOut` compares out-degrees against
/// the out-degrees of in-neighbors, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DirectedCase {
    InWOut,
    OutWIn,
    OutWOut,
    InWIn,
}

impl DirectedCase {
    pub const ALL: [DirectedCase; 4] =
        [DirectedCase::InWOut, DirectedCase::OutWIn, DirectedCase::OutWOut, DirectedCase::InWIn];

    pub fn walk_role(self) -> WalkRole {
        match self {
            DirectedCase::InWOut | DirectedCase::InWIn => WalkRole::In,
            DirectedCase::OutWIn | DirectedCase::OutWOut => WalkRole::Out,
        }
    }

    /// Which degree is being compared.
    pub fn counted_role(self) -> WalkRole {
        match self {
            DirectedCase::InWOut | DirectedCase::OutWOut => WalkRole::Out,
            DirectedCase::OutWIn | DirectedCase::InWIn => WalkRole::In,
        }
    }
}

impl fmt::Display for DirectedCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DirectedCase::InWOut => "in-w(out)",
            DirectedCase::OutWIn => "out-w(in)",
            DirectedCase::OutWOut => "out-w(out)",
            DirectedCase::InWIn => "in-w(in)",
        };
        write!(f, "{s}")
    }
}

/// Directed neighbor vocabulary for generalized paradoxes: an enemy/friend
/// is someone you point at (out-neighbor), a hater/liker someone who points
/// at you (in-neighbor).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NeighborRole {
    Enemy,
    Hater,
}

impl NeighborRole {
    pub fn walk_role(self) -> WalkRole {
        match self {
            NeighborRole::Enemy => WalkRole::Out,
            NeighborRole::Hater => WalkRole::In,
        }
    }
}

impl fmt::Display for NeighborRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NeighborRole::Enemy => write!(f, "enemy"),
            NeighborRole::Hater => write!(f, "hater"),
        }
    }
}

/// Node universe for global directed deltas. `AllNodes` averages the
/// measured quantity over every node of the view; `WalkedNonzero` restricts
/// to nodes with nonzero walked degree, the convention under which the gap
/// identities are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeUniverse {
    AllNodes,
    WalkedNonzero,
}

/// A non-topological node attribute, indexed by original node id.
#[derive(Debug, Clone, PartialEq)]
pub struct AttributeVector {
    pub name: String,
    pub values: Vec<Option<f64>>,
}

impl AttributeVector {
    pub fn new(name: impl Into<String>, values: Vec<Option<f64>>) -> Self {
        AttributeVector { name: name.into(), values }
    }

    pub fn total(name: impl Into<String>, values: Vec<f64>) -> Self {
        AttributeVector { name: name.into(), values: values.into_iter().map(Some).collect() }
    }

    /// Attribute values re-indexed by view node; every retained node must
    /// carry a value.
    pub fn view_values(&self, v: &GraphView) -> Result<Vec<f64>> {
        v.retained()
            .iter()
            .map(|&orig| {
                self.values
                    .get(orig as usize)
                    .copied()
                    .flatten()
                    .ok_or_else(|| Error::MissingAttribute { name: self.name.clone(), node: orig })
            })
            .collect()
    }

    /// View nodes that carry a value, as a keep mask.
    pub fn coverage(&self, v: &GraphView) -> Vec<bool> {
        v.retained()
            .iter()
            .map(|&orig| self.values.get(orig as usize).copied().flatten().is_some())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum ParadoxVariant {
    Same { sign: Sign },
    Mixed { walk: Sign },
    Generalized { sign: Sign, attribute: String },
    HigherOrder { sign: Sign, order: u32 },
    DirectedSame { sign: Sign, case: String },
    DirectedMixed { walk_sign: Sign, walk_role: WalkRole, count_sign: Sign, count_role: WalkRole },
    DirectedGeneralized { sign: Sign, neighbor: NeighborRole, attribute: String },
}

impl fmt::Display for ParadoxVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn w(sign: Sign) -> &'static str {
            match sign {
                Sign::Positive => "+w",
                Sign::Negative => "-w",
            }
        }
        fn c(sign: Sign) -> &'static str {
            match sign {
                Sign::Positive => "+",
                Sign::Negative => "-",
            }
        }
        match self {
            ParadoxVariant::Same { sign } => write!(f, "same:{}({})", w(*sign), c(*sign)),
            ParadoxVariant::Mixed { walk } => {
                write!(f, "mixed:{}({})", w(*walk), c(walk.other()))
            }
            ParadoxVariant::Generalized { sign, attribute } => {
                write!(f, "gen:{}({})", w(*sign), attribute)
            }
            ParadoxVariant::HigherOrder { sign, order } => {
                write!(f, "higher:{}({}):l{}", w(*sign), c(*sign), order)
            }
            ParadoxVariant::DirectedSame { sign, case } => {
                write!(f, "dir:{}:{}", sign, case)
            }
            ParadoxVariant::DirectedMixed { walk_sign, walk_role, count_sign, count_role } => {
                let role = |r: &WalkRole| match r {
                    WalkRole::In => "in",
                    WalkRole::Out => "out",
                };
                write!(
                    f,
                    "dir-mixed:{}{}-w({}{})",
                    c(*walk_sign),
                    role(walk_role),
                    c(*count_sign),
                    role(count_role)
                )
            }
            ParadoxVariant::DirectedGeneralized { sign, neighbor, attribute } => {
                write!(f, "dir-gen:{}:{}({})", sign, neighbor, attribute)
            }
        }
    }
}

/// One paradox variant's result: the global delta, the local delta, and the
/// per-node local differences over eligible nodes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParadoxReport {
    pub variant: ParadoxVariant,
    pub delta_g: f64,
    pub delta_l: f64,
    pub eligible_count: usize,
    /// Original node ids of the eligible nodes, parallel to `per_node`.
    pub node_ids: Vec<u32>,
    pub per_node: Vec<f64>,
}

fn require_undirected(v: &GraphView) -> Result<()> {
    if v.is_directed() {
        Err(Error::DirectedViewUnsupported)
    } else {
        Ok(())
    }
}

fn require_directed(v: &GraphView) -> Result<()> {
    if v.is_directed() {
        Ok(())
    } else {
        Err(Error::UndirectedViewUnsupported)
    }
}

// ---------------------------------------------------------------------------
// Undirected primitives
// ---------------------------------------------------------------------------

/// Global attribute comparison on an undirected view:
/// mean of `x` over nodes minus the `k`-weighted mean over edge endpoints.
pub(crate) fn attr_global(v: &GraphView, x: &[f64]) -> f64 {
    let n = v.n() as f64;
    let mut sum_x = 0.0;
    let mut weighted = 0.0; // sum over ordered incidences of the endpoint value
    let mut two_m = 0.0;
    for i in 0..v.n() {
        let k = v.neighbors(i).len() as f64;
        sum_x += x[i];
        weighted += k * x[i];
        two_m += k;
    }
    sum_x / n - weighted / two_m
}

/// Per-node local differences `x_i - mean_{j ~ i} x_j` over nodes with
/// degree >= 1, plus their mean.
pub(crate) fn attr_local(v: &GraphView, x: &[f64]) -> (f64, Vec<u32>, Vec<f64>) {
    let mut node_ids = Vec::new();
    let mut per_node = Vec::new();
    let mut total = 0.0;
    for i in 0..v.n() {
        let nbrs = v.neighbors(i);
        if nbrs.is_empty() {
            continue;
        }
        let neighbor_sum: f64 = nbrs.iter().map(|&j| x[j as usize]).sum();
        let delta = x[i] - neighbor_sum / nbrs.len() as f64;
        node_ids.push(v.original_id(i));
        per_node.push(delta);
        total += delta;
    }
    let delta_l = total / per_node.len() as f64;
    (delta_l, node_ids, per_node)
}

// ---------------------------------------------------------------------------
// Same-world
// ---------------------------------------------------------------------------

/// Global same-world delta: mean degree minus mean degree of a random edge
/// endpoint. Always <= 0, with equality exactly on regular views.
pub fn delta_global_same(v: &GraphView) -> Result<f64> {
    require_undirected(v)?;
    let k = v.undirected_degrees();
    let n = v.n() as i128;
    let sum_k: i128 = k.iter().map(|&d| d as i128).sum();
    let sum_k2: i128 = k.iter().map(|&d| (d as i128) * (d as i128)).sum();
    let num = sum_k * sum_k - n * sum_k2;
    let den = sum_k * n;
    Ok(num as f64 / den as f64)
}

pub fn delta_local_same(v: &GraphView) -> Result<ParadoxReport> {
    require_undirected(v)?;
    let x: Vec<f64> = v.undirected_degrees().iter().map(|&d| d as f64).collect();
    let (delta_l, node_ids, per_node) = attr_local(v, &x);
    Ok(ParadoxReport {
        variant: ParadoxVariant::Same { sign: v.sign() },
        delta_g: delta_global_same(v)?,
        delta_l,
        eligible_count: per_node.len(),
        node_ids,
        per_node,
    })
}

// ---------------------------------------------------------------------------
// Generalized attribute
// ---------------------------------------------------------------------------

pub fn delta_global_generalized(v: &GraphView, attr: &AttributeVector) -> Result<f64> {
    require_undirected(v)?;
    let x = attr.view_values(v)?;
    Ok(attr_global(v, &x))
}

pub fn delta_local_generalized(v: &GraphView, attr: &AttributeVector) -> Result<ParadoxReport> {
    require_undirected(v)?;
    let x = attr.view_values(v)?;
    let (delta_l, node_ids, per_node) = attr_local(v, &x);
    Ok(ParadoxReport {
        variant: ParadoxVariant::Generalized { sign: v.sign(), attribute: attr.name.clone() },
        delta_g: attr_global(v, &x),
        delta_l,
        eligible_count: per_node.len(),
        node_ids,
        per_node,
    })
}

// ---------------------------------------------------------------------------
// Mixed world
// ---------------------------------------------------------------------------

/// Global mixed-world delta. Walks the edges of `v_walk` and counts
/// `counts` (the other sign's degree, indexed by view node of `v_walk`).
/// This is the generalized delta with the counted degree as the attribute.
pub fn delta_global_mixed(v_walk: &GraphView, counts: &[f64]) -> Result<f64> {
    require_undirected(v_walk)?;
    assert_eq!(counts.len(), v_walk.n());
    Ok(attr_global(v_walk, counts))
}

pub fn delta_local_mixed(v_walk: &GraphView, counts: &[f64]) -> Result<ParadoxReport> {
    require_undirected(v_walk)?;
    assert_eq!(counts.len(), v_walk.n());
    let (delta_l, node_ids, per_node) = attr_local(v_walk, counts);
    Ok(ParadoxReport {
        variant: ParadoxVariant::Mixed { walk: v_walk.sign() },
        delta_g: attr_global(v_walk, counts),
        delta_l,
        eligible_count: per_node.len(),
        node_ids,
        per_node,
    })
}

/// Exact integer numerator `sum(a)*sum(b) - n*sum(a*b)` shared by the
/// mixed-world and directed cases 3-4 sign identities: it equals
/// `-n^2 * cov(a, b)`.
pub fn degree_pair_numerator(a: &[u64], b: &[u64]) -> i128 {
    assert_eq!(a.len(), b.len());
    let n = a.len() as i128;
    let sum_a: i128 = a.iter().map(|&x| x as i128).sum();
    let sum_b: i128 = b.iter().map(|&x| x as i128).sum();
    let sum_ab: i128 = a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum();
    sum_a * sum_b - n * sum_ab
}

/// Numerator of the generalized global delta with a real attribute:
/// `sum(x)*sum(k) - n*sum(k*x)`, again `-n^2 * cov(k, x)`.
pub fn attr_numerator(k: &[u64], x: &[f64]) -> f64 {
    assert_eq!(k.len(), x.len());
    let n = k.len() as f64;
    let sum_k: f64 = k.iter().map(|&d| d as f64).sum();
    let sum_x: f64 = x.iter().sum();
    let sum_kx: f64 = k.iter().zip(x).map(|(&d, &v)| d as f64 * v).sum();
    sum_x * sum_k - n * sum_kx
}

// ---------------------------------------------------------------------------
// Higher order
// ---------------------------------------------------------------------------

/// Global higher-order delta for walk length `ell`; `ell = 1` reduces to the
/// same-world delta. Non-positive for every odd `ell`.
pub fn delta_global_higher(v: &GraphView, ell: u32) -> Result<f64> {
    require_undirected(v)?;
    assert!(ell >= 1);
    if ell > crate::graph::MAX_WALK_ORDER {
        return Err(Error::WalkOrderTooLarge(ell));
    }
    let n = v.n() as i128;
    let s1: i128 = v.walk_vector(1)?.iter().map(|&w| w as i128).sum();
    let s_ell: i128 = v.walk_vector(ell)?.iter().map(|&w| w as i128).sum();
    let s_ell1: i128 = v.walk_vector(ell + 1)?.iter().map(|&w| w as i128).sum();
    let num = s1 * s_ell - s_ell1 * n;
    let den = s_ell * n;
    Ok(num as f64 / den as f64)
}

/// Local higher-order delta: own degree minus the degree of `ell`-hop walk
/// endpoints averaged with first-step degree weighting.
pub fn delta_local_higher(v: &GraphView, ell: u32) -> Result<ParadoxReport> {
    require_undirected(v)?;
    assert!(ell >= 1);
    if ell > crate::graph::MAX_WALK_ORDER {
        return Err(Error::WalkOrderTooLarge(ell));
    }
    let k = v.undirected_degrees();
    let walked = v.walk_apply(&k, ell)?;
    let mut node_ids = Vec::new();
    let mut per_node = Vec::new();
    let mut total = 0.0;
    for i in 0..v.n() {
        if k[i] == 0 {
            continue;
        }
        let delta = k[i] as f64 - walked[i] as f64 / k[i] as f64;
        node_ids.push(v.original_id(i));
        per_node.push(delta);
        total += delta;
    }
    let delta_l = total / per_node.len() as f64;
    Ok(ParadoxReport {
        variant: ParadoxVariant::HigherOrder { sign: v.sign(), order: ell },
        delta_g: delta_global_higher(v, ell)?,
        delta_l,
        eligible_count: per_node.len(),
        node_ids,
        per_node,
    })
}

// ---------------------------------------------------------------------------
// Directed primitives
// ---------------------------------------------------------------------------

fn walked_degrees(v: &GraphView, role: WalkRole) -> Vec<u64> {
    match role {
        WalkRole::In => v.in_degrees(),
        WalkRole::Out => v.out_degrees(),
    }
}

/// Directed global attribute comparison: mean of `x` over the chosen node
/// universe minus the mean of `x` over walked-to neighbors of random arcs.
pub fn directed_attr_global(
    v: &GraphView,
    walk_role: WalkRole,
    x: &[f64],
    universe: NodeUniverse,
) -> Result<f64> {
    require_directed(v)?;
    assert_eq!(x.len(), v.n());
    let m = v.edge_count() as f64;
    let mut edge_sum = 0.0;
    for i in 0..v.n() {
        for &j in v.neighbors(i) {
            // arc i -> j: walking In reaches the source, Out the target
            let neighbor = match walk_role {
                WalkRole::In => i,
                WalkRole::Out => j as usize,
            };
            edge_sum += x[neighbor];
        }
    }
    let (node_sum, node_count) = match universe {
        NodeUniverse::AllNodes => (x.iter().sum::<f64>(), v.n()),
        NodeUniverse::WalkedNonzero => {
            let kw = walked_degrees(v, walk_role);
            let mut sum = 0.0;
            let mut count = 0usize;
            for i in 0..v.n() {
                if kw[i] > 0 {
                    sum += x[i];
                    count += 1;
                }
            }
            (sum, count)
        }
    };
    Ok(node_sum / node_count as f64 - edge_sum / m)
}

/// Directed per-node local differences, eligible where the walked degree is
/// nonzero.
pub fn directed_attr_local(
    v: &GraphView,
    walk_role: WalkRole,
    x: &[f64],
) -> Result<(f64, Vec<u32>, Vec<f64>)> {
    require_directed(v)?;
    assert_eq!(x.len(), v.n());
    let mut node_ids = Vec::new();
    let mut per_node = Vec::new();
    let mut total = 0.0;
    for i in 0..v.n() {
        let nbrs = match walk_role {
            WalkRole::In => v.in_neighbors(i),
            WalkRole::Out => v.neighbors(i),
        };
        if nbrs.is_empty() {
            continue;
        }
        let neighbor_sum: f64 = nbrs.iter().map(|&j| x[j as usize]).sum();
        let delta = x[i] - neighbor_sum / nbrs.len() as f64;
        node_ids.push(v.original_id(i));
        per_node.push(delta);
        total += delta;
    }
    let delta_l = total / per_node.len() as f64;
    Ok((delta_l, node_ids, per_node))
}

fn counted_values(v: &GraphView, role: WalkRole) -> Vec<f64> {
    walked_degrees(v, role).iter().map(|&d| d as f64).collect()
}

/// One of the four directed same-world cases on a directed view.
pub fn delta_directed_view(
    v: &GraphView,
    case: DirectedCase,
    universe: NodeUniverse,
) -> Result<ParadoxReport> {
    let x = counted_values(v, case.counted_role());
    let delta_g = directed_attr_global(v, case.walk_role(), &x, universe)?;
    let (delta_l, node_ids, per_node) = directed_attr_local(v, case.walk_role(), &x)?;
    Ok(ParadoxReport {
        variant: ParadoxVariant::DirectedSame { sign: v.sign(), case: case.to_string() },
        delta_g,
        delta_l,
        eligible_count: per_node.len(),
        node_ids,
        per_node,
    })
}

/// Directed same-world paradox straight from a signed digraph.
pub fn delta_directed(
    g: &crate::graph::SignedDigraph,
    sign: Sign,
    case: DirectedCase,
    universe: NodeUniverse,
) -> Result<ParadoxReport> {
    let v = crate::graph::make_view(g, sign, ViewMode::Directed, false)?;
    delta_directed_view(&v, case, universe)
}

/// Directed mixed-world paradox: walk arcs of `walk_sign` in `walk_role`
/// direction, counting the `count_role` degree in `count_sign`'s world.
pub fn delta_directed_mixed(
    g: &crate::graph::SignedDigraph,
    walk_sign: Sign,
    walk_role: WalkRole,
    count_sign: Sign,
    count_role: WalkRole,
    universe: NodeUniverse,
) -> Result<ParadoxReport> {
    let v_walk = crate::graph::make_view(g, walk_sign, ViewMode::Directed, false)?;
    let v_count = crate::graph::make_view(g, count_sign, ViewMode::Directed, false)?;
    // both views share the full node universe, so indices line up
    let x = counted_values(&v_count, count_role);
    let delta_g = directed_attr_global(&v_walk, walk_role, &x, universe)?;
    let (delta_l, node_ids, per_node) = directed_attr_local(&v_walk, walk_role, &x)?;
    Ok(ParadoxReport {
        variant: ParadoxVariant::DirectedMixed { walk_sign, walk_role, count_sign, count_role },
        delta_g,
        delta_l,
        eligible_count: per_node.len(),
        node_ids,
        per_node,
    })
}

/// Directed generalized paradox over an attribute, choosing enemies
/// (out-neighbors) or haters (in-neighbors) of the sign world.
pub fn delta_directed_generalized(
    g: &crate::graph::SignedDigraph,
    sign: Sign,
    neighbor: NeighborRole,
    attr: &AttributeVector,
    universe: NodeUniverse,
) -> Result<ParadoxReport> {
    let v = crate::graph::make_view(g, sign, ViewMode::Directed, false)?;
    let x = attr.view_values(&v)?;
    let delta_g = directed_attr_global(&v, neighbor.walk_role(), &x, universe)?;
    let (delta_l, node_ids, per_node) = directed_attr_local(&v, neighbor.walk_role(), &x)?;
    Ok(ParadoxReport {
        variant: ParadoxVariant::DirectedGeneralized {
            sign,
            neighbor,
            attribute: attr.name.clone(),
        },
        delta_g,
        delta_l,
        eligible_count: per_node.len(),
        node_ids,
        per_node,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_view, SignedDigraph};

    fn sym_view(n: usize, edges: &[(u32, u32)]) -> GraphView {
        let g = SignedDigraph::from_arcs(n, [], edges.iter().copied()).unwrap();
        make_view(&g, Sign::Negative, ViewMode::Symmetrized, false).unwrap()
    }

    fn path3() -> GraphView {
        sym_view(3, &[(0, 1), (1, 2)])
    }

    fn path4() -> GraphView {
        sym_view(4, &[(0, 1), (1, 2), (2, 3)])
    }

    fn star4() -> GraphView {
        sym_view(4, &[(0, 1), (0, 2), (0, 3)])
    }

    fn k4() -> GraphView {
        sym_view(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    const EPS: f64 = 1e-12;

    #[test]
    fn global_same_fixtures() {
        assert!((delta_global_same(&path3()).unwrap() + 1.0 / 6.0).abs() < EPS);
        assert!((delta_global_same(&k4()).unwrap()).abs() < EPS);
        assert!((delta_global_same(&star4()).unwrap() + 0.5).abs() < EPS);
    }

    #[test]
    fn local_same_fixtures() {
        let r = delta_local_same(&path3()).unwrap();
        assert_eq!(r.per_node, vec![-1.0, 1.0, -1.0]);
        assert!((r.delta_l + 1.0 / 3.0).abs() < EPS);
        assert_eq!(r.eligible_count, 3);

        let r = delta_local_same(&k4()).unwrap();
        assert!(r.per_node.iter().all(|&d| d.abs() < EPS));
        assert!(r.delta_l.abs() < EPS);

        let r = delta_local_same(&star4()).unwrap();
        assert!((r.delta_l + 1.0).abs() < EPS);
    }

    #[test]
    fn delta_l_is_mean_of_per_node() {
        let r = delta_local_same(&path4()).unwrap();
        let mean = r.per_node.iter().sum::<f64>() / r.per_node.len() as f64;
        assert!((r.delta_l - mean).abs() < EPS);
    }

    #[test]
    fn generalized_fixtures() {
        let attr = AttributeVector::total("x", vec![0.0, 1.0, 0.0]);
        let v = path3();
        assert!((delta_global_generalized(&v, &attr).unwrap() + 1.0 / 6.0).abs() < EPS);
        let r = delta_local_generalized(&v, &attr).unwrap();
        assert_eq!(r.per_node, vec![-1.0, 1.0, -1.0]);
        assert!((r.delta_l + 1.0 / 3.0).abs() < EPS);

        // constant attribute
        let c = AttributeVector::total("c", vec![7.0; 3]);
        assert!(delta_global_generalized(&v, &c).unwrap().abs() < EPS);
        let r = delta_local_generalized(&v, &c).unwrap();
        assert!(r.per_node.iter().all(|&d| d.abs() < EPS));
    }

    #[test]
    fn generalized_with_degree_reduces_to_same() {
        let v = path4();
        let k: Vec<f64> = v.undirected_degrees().iter().map(|&d| d as f64).collect();
        let attr = AttributeVector::total("k", k);
        assert!(
            (delta_global_generalized(&v, &attr).unwrap() - delta_global_same(&v).unwrap()).abs()
                < EPS
        );
        let g_loc = delta_local_generalized(&v, &attr).unwrap();
        let s_loc = delta_local_same(&v).unwrap();
        assert_eq!(g_loc.per_node, s_loc.per_node);
    }

    #[test]
    fn missing_attribute_is_an_error() {
        let v = path3();
        let attr = AttributeVector::new("x", vec![Some(1.0), None, Some(0.0)]);
        assert!(matches!(
            delta_global_generalized(&v, &attr),
            Err(Error::MissingAttribute { node: 1, .. })
        ));
    }

    #[test]
    fn mixed_three_node_example() {
        // positive edge {0,1}, negative edge {1,2}; walk positive, count negative
        let g = SignedDigraph::from_arcs(3, [(0, 1), (1, 0)], [(1, 2), (2, 1)]).unwrap();
        let v_pos = make_view(&g, Sign::Positive, ViewMode::Symmetrized, false).unwrap();
        let v_neg = make_view(&g, Sign::Negative, ViewMode::Symmetrized, false).unwrap();
        let k_neg: Vec<f64> = v_neg.undirected_degrees().iter().map(|&d| d as f64).collect();
        // views share the full universe here, so counts re-index trivially
        let dg = delta_global_mixed(&v_pos, &k_neg).unwrap();
        assert!((dg - 1.0 / 6.0).abs() < EPS);

        let r = delta_local_mixed(&v_pos, &k_neg).unwrap();
        assert_eq!(r.node_ids, vec![0, 1]);
        assert_eq!(r.per_node, vec![-1.0, 1.0]);
        assert!(r.delta_l.abs() < EPS);
    }

    #[test]
    fn mixed_constant_counts_vanish() {
        // positive world a 4-cycle: constant positive degree
        let g = SignedDigraph::from_arcs(
            4,
            [(0, 1), (1, 2), (2, 3), (3, 0)],
            [(0, 2), (1, 3)],
        )
        .unwrap();
        let v_neg = make_view(&g, Sign::Negative, ViewMode::Symmetrized, false).unwrap();
        let v_pos = make_view(&g, Sign::Positive, ViewMode::Symmetrized, false).unwrap();
        let k_pos: Vec<f64> = v_pos.undirected_degrees().iter().map(|&d| d as f64).collect();
        assert!(delta_global_mixed(&v_neg, &k_pos).unwrap().abs() < EPS);
    }

    #[test]
    fn higher_order_fixtures() {
        let v = path4();
        assert!((delta_global_higher(&v, 2).unwrap() + 0.1).abs() < EPS);
        let r = delta_local_higher(&v, 2).unwrap();
        assert!((r.delta_l + 1.25).abs() < EPS);
        assert_eq!(r.per_node, vec![-2.0, -0.5, -0.5, -2.0]);

        // ell = 1 reduces to same-world
        assert!(
            (delta_global_higher(&v, 1).unwrap() - delta_global_same(&v).unwrap()).abs() < EPS
        );
        let r1 = delta_local_higher(&v, 1).unwrap();
        let rs = delta_local_same(&v).unwrap();
        assert!((r1.delta_l - rs.delta_l).abs() < EPS);

        // regular graph: global zero at any order; local k - k^ell
        for ell in 1..=4 {
            assert!(delta_global_higher(&k4(), ell).unwrap().abs() < EPS);
            let want = 3.0 - 3.0f64.powi(ell as i32);
            assert!((delta_local_higher(&k4(), ell).unwrap().delta_l - want).abs() < EPS);
        }
    }

    #[test]
    fn directed_single_arc_case1() {
        let g = SignedDigraph::from_arcs(2, [], [(0, 1)]).unwrap();
        let r =
            delta_directed(&g, Sign::Negative, DirectedCase::InWOut, NodeUniverse::AllNodes)
                .unwrap();
        assert!((r.delta_g + 0.5).abs() < EPS);
        // only node 1 has an in-neighbor
        assert_eq!(r.node_ids, vec![1]);
        assert_eq!(r.per_node, vec![-1.0]);
    }

    #[test]
    fn directed_reciprocal_dyad_all_cases_zero() {
        let g = SignedDigraph::from_arcs(2, [], [(0, 1), (1, 0)]).unwrap();
        for case in DirectedCase::ALL {
            let r = delta_directed(&g, Sign::Negative, case, NodeUniverse::AllNodes).unwrap();
            assert!(r.delta_g.abs() < EPS, "{case}");
            assert!(r.delta_l.abs() < EPS, "{case}");
        }
    }

    #[test]
    fn directed_cases_three_four_share_global_value() {
        let g = SignedDigraph::from_arcs(
            5,
            [],
            [(0, 1), (1, 2), (2, 0), (3, 1), (0, 4), (4, 2)],
        )
        .unwrap();
        let g3 =
            delta_directed(&g, Sign::Negative, DirectedCase::OutWOut, NodeUniverse::AllNodes)
                .unwrap()
                .delta_g;
        let g4 = delta_directed(&g, Sign::Negative, DirectedCase::InWIn, NodeUniverse::AllNodes)
            .unwrap()
            .delta_g;
        assert!((g3 - g4).abs() < EPS);
    }

    #[test]
    fn directed_mixed_constant_counts() {
        // disjoint sign worlds, constant out-degrees in the counted world
        let g = SignedDigraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [(0, 2), (2, 0)])
            .unwrap();
        let r = delta_directed_mixed(
            &g,
            Sign::Negative,
            WalkRole::In,
            Sign::Positive,
            WalkRole::Out,
            NodeUniverse::AllNodes,
        )
        .unwrap();
        assert!(r.delta_g.abs() < EPS);
        assert!(r.delta_l.abs() < EPS);
    }

    #[test]
    fn directed_generalized_reduces_to_case1() {
        let g = SignedDigraph::from_arcs(
            5,
            [],
            [(0, 1), (1, 2), (2, 0), (3, 1), (0, 4)],
        )
        .unwrap();
        let v = make_view(&g, Sign::Negative, ViewMode::Directed, false).unwrap();
        let k_out: Vec<f64> = v.out_degrees().iter().map(|&d| d as f64).collect();
        let attr = AttributeVector::total("out", k_out);
        let gen = delta_directed_generalized(
            &g,
            Sign::Negative,
            NeighborRole::Hater,
            &attr,
            NodeUniverse::AllNodes,
        )
        .unwrap();
        let case1 =
            delta_directed(&g, Sign::Negative, DirectedCase::InWOut, NodeUniverse::AllNodes)
                .unwrap();
        assert!((gen.delta_g - case1.delta_g).abs() < EPS);
        assert_eq!(gen.per_node, case1.per_node);
    }

    #[test]
    fn directed_generalized_constant_attr() {
        let g = SignedDigraph::from_arcs(3, [], [(0, 1), (1, 2)]).unwrap();
        let attr = AttributeVector::total("c", vec![3.0; 3]);
        for neighbor in [NeighborRole::Enemy, NeighborRole::Hater] {
            let r = delta_directed_generalized(
                &g,
                Sign::Negative,
                neighbor,
                &attr,
                NodeUniverse::AllNodes,
            )
            .unwrap();
            assert!(r.delta_g.abs() < EPS);
            assert!(r.delta_l.abs() < EPS);
        }
    }
}
