//! Signed directed graphs and the undirected/directed views derived from them.
//!
//! A [`SignedDigraph`] holds two directed edge sets over a common node set,
//! one per tie sign. Analyses never run on the raw digraph: they run on a
//! [`GraphView`], a single-sign adjacency obtained by symmetrizing,
//! reciprocating, or keeping the arcs of one sign, optionally with isolated
//! nodes removed. Views re-index retained nodes densely and keep a map back
//! to the original ids.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Walk counting stays in checked 64-bit integers; longer walks than this
/// are rejected up front.
pub const MAX_WALK_ORDER: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn other(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Positive => write!(f, "positive"),
            Sign::Negative => write!(f, "negative"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ViewMode {
    Symmetrized,
    Reciprocated,
    Directed,
}

impl fmt::Display for ViewMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViewMode::Symmetrized => write!(f, "symmetrized"),
            ViewMode::Reciprocated => write!(f, "reciprocated"),
            ViewMode::Directed => write!(f, "directed"),
        }
    }
}

/// A simple signed directed graph: no self-loops, no duplicate arcs within a
/// sign. The same ordered pair may carry both a positive and a negative arc;
/// validation counts such overlaps but keeps them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedDigraph {
    n: usize,
    pos: BTreeSet<(u32, u32)>,
    neg: BTreeSet<(u32, u32)>,
    labels: Option<Vec<String>>,
}

impl SignedDigraph {
    pub fn new(n: usize) -> Self {
        SignedDigraph { n, pos: BTreeSet::new(), neg: BTreeSet::new(), labels: None }
    }

    /// Builds a graph from arc lists, rejecting self-loops, out-of-range
    /// endpoints, and duplicates within a sign.
    pub fn from_arcs(
        n: usize,
        pos: impl IntoIterator<Item = (u32, u32)>,
        neg: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self> {
        let mut g = SignedDigraph::new(n);
        for (u, v) in pos {
            g.add_arc(Sign::Positive, u, v)?;
        }
        for (u, v) in neg {
            g.add_arc(Sign::Negative, u, v)?;
        }
        Ok(g)
    }

    pub fn add_arc(&mut self, sign: Sign, u: u32, v: u32) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        for node in [u, v] {
            if node as usize >= self.n {
                return Err(Error::EndpointOutOfRange { node, n: self.n });
            }
        }
        let set = match sign {
            Sign::Positive => &mut self.pos,
            Sign::Negative => &mut self.neg,
        };
        if !set.insert((u, v)) {
            return Err(Error::DuplicateEdge { u, v, sign });
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self, sign: Sign) -> impl Iterator<Item = (u32, u32)> + '_ {
        match sign {
            Sign::Positive => self.pos.iter().copied(),
            Sign::Negative => self.neg.iter().copied(),
        }
    }

    pub fn arc_count(&self, sign: Sign) -> usize {
        match sign {
            Sign::Positive => self.pos.len(),
            Sign::Negative => self.neg.len(),
        }
    }

    pub fn has_arc(&self, sign: Sign, u: u32, v: u32) -> bool {
        match sign {
            Sign::Positive => self.pos.contains(&(u, v)),
            Sign::Negative => self.neg.contains(&(u, v)),
        }
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    /// External label for a node, falling back to its numeric id.
    pub fn label(&self, node: u32) -> String {
        match &self.labels {
            Some(ls) => ls[node as usize].clone(),
            None => node.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
}

/// Fraction of arcs whose reverse arc is also present; 0.0 for an empty set.
fn reciprocated_fraction(arcs: &BTreeSet<(u32, u32)>) -> f64 {
    if arcs.is_empty() {
        return 0.0;
    }
    let mutual = arcs.iter().filter(|&&(u, v)| arcs.contains(&(v, u))).count();
    mutual as f64 / arcs.len() as f64
}

/// Counts reported by [`validate`]. Construction already enforces the
/// structural invariants, so this is purely descriptive.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostics {
    pub nodes: usize,
    pub positive_arcs: usize,
    pub negative_arcs: usize,
    /// Ordered pairs present in both edge sets.
    pub overlapping_pairs: usize,
    pub positive_reciprocated_fraction: f64,
    pub negative_reciprocated_fraction: f64,
}

pub fn validate(g: &SignedDigraph) -> Diagnostics {
    Diagnostics {
        nodes: g.n,
        positive_arcs: g.pos.len(),
        negative_arcs: g.neg.len(),
        overlapping_pairs: g.pos.intersection(&g.neg).count(),
        positive_reciprocated_fraction: reciprocated_fraction(&g.pos),
        negative_reciprocated_fraction: reciprocated_fraction(&g.neg),
    }
}

/// Fraction of `sign` arcs whose reverse arc exists.
pub fn reciprocity(g: &SignedDigraph, sign: Sign) -> Result<f64> {
    if g.arc_count(sign) == 0 {
        return Err(Error::EmptyWorld { sign, mode: ViewMode::Directed });
    }
    Ok(match sign {
        Sign::Positive => reciprocated_fraction(&g.pos),
        Sign::Negative => reciprocated_fraction(&g.neg),
    })
}

/// Degree vectors of a view, indexed by view node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeView {
    Undirected { k: Vec<u64> },
    Directed { k_in: Vec<u64>, k_out: Vec<u64> },
}

/// A single-sign adjacency derived from a [`SignedDigraph`].
///
/// Undirected modes store each neighbor list once per endpoint; directed
/// mode stores out- and in-lists. Nodes are re-indexed densely; `retained`
/// maps a view index back to the original node id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphView {
    mode: ViewMode,
    sign: Sign,
    retained: Vec<u32>,
    adj: Vec<Vec<u32>>,
    in_adj: Vec<Vec<u32>>,
    /// Undirected edge count, or arc count when directed.
    edge_count: usize,
}

impl GraphView {
    pub fn n(&self) -> usize {
        self.retained.len()
    }

    pub fn mode(&self) -> ViewMode {
        self.mode
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_directed(&self) -> bool {
        self.mode == ViewMode::Directed
    }

    /// Undirected edge count, or arc count for a directed view.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Neighbors of a view node (out-neighbors when directed), sorted.
    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    pub fn in_neighbors(&self, i: usize) -> &[u32] {
        debug_assert!(self.is_directed());
        &self.in_adj[i]
    }

    /// Map from view index to original node id.
    pub fn retained(&self) -> &[u32] {
        &self.retained
    }

    pub fn original_id(&self, i: usize) -> u32 {
        self.retained[i]
    }

    pub fn degrees(&self) -> DegreeView {
        if self.is_directed() {
            DegreeView::Directed {
                k_in: self.in_adj.iter().map(|l| l.len() as u64).collect(),
                k_out: self.adj.iter().map(|l| l.len() as u64).collect(),
            }
        } else {
            DegreeView::Undirected { k: self.adj.iter().map(|l| l.len() as u64).collect() }
        }
    }

    /// Undirected degree vector. Panics on directed views.
    pub fn undirected_degrees(&self) -> Vec<u64> {
        assert!(!self.is_directed());
        self.adj.iter().map(|l| l.len() as u64).collect()
    }

    pub fn out_degrees(&self) -> Vec<u64> {
        self.adj.iter().map(|l| l.len() as u64).collect()
    }

    pub fn in_degrees(&self) -> Vec<u64> {
        assert!(self.is_directed());
        self.in_adj.iter().map(|l| l.len() as u64).collect()
    }

    /// Undirected edges as view-index pairs with `u < v`.
    pub fn undirected_edges(&self) -> Vec<(u32, u32)> {
        assert!(!self.is_directed());
        let mut edges = Vec::with_capacity(self.edge_count);
        for (i, nbrs) in self.adj.iter().enumerate() {
            for &j in nbrs {
                if (i as u32) < j {
                    edges.push((i as u32, j));
                }
            }
        }
        edges
    }

    /// Directed arcs as view-index pairs.
    pub fn arcs(&self) -> Vec<(u32, u32)> {
        assert!(self.is_directed());
        let mut arcs = Vec::with_capacity(self.edge_count);
        for (i, outs) in self.adj.iter().enumerate() {
            for &j in outs {
                arcs.push((i as u32, j));
            }
        }
        arcs
    }

    /// Entry `i` counts the walks of length `ell` that start at view node
    /// `i` (follow out-edges when directed). `ell = 1` reproduces degrees.
    pub fn walk_vector(&self, ell: u32) -> Result<Vec<u64>> {
        let ones = vec![1u64; self.n()];
        self.walk_apply(&ones, ell)
    }

    /// Applies the adjacency `ell` times to an integer vector with overflow
    /// detection.
    pub fn walk_apply(&self, vector: &[u64], ell: u32) -> Result<Vec<u64>> {
        assert!(ell >= 1, "walk order must be at least 1");
        // one step of headroom past the public cap: order-ell deltas need
        // counts of walks one longer
        if ell > MAX_WALK_ORDER + 1 {
            return Err(Error::WalkOrderTooLarge(ell));
        }
        let mut current = vector.to_vec();
        let mut next = vec![0u64; self.n()];
        for step in 1..=ell {
            for (i, nbrs) in self.adj.iter().enumerate() {
                let mut acc: u64 = 0;
                for &j in nbrs {
                    acc = acc
                        .checked_add(current[j as usize])
                        .ok_or(Error::WalkOverflow { order: step })?;
                }
                next[i] = acc;
            }
            std::mem::swap(&mut current, &mut next);
        }
        Ok(current)
    }

    /// Re-derives the view keeping only nodes flagged in `keep` (indexed by
    /// view node). Edges with a dropped endpoint disappear.
    pub fn induced(&self, keep: &[bool]) -> Result<GraphView> {
        assert_eq!(keep.len(), self.n());
        let mut new_index = vec![usize::MAX; self.n()];
        let mut retained = Vec::new();
        for i in 0..self.n() {
            if keep[i] {
                new_index[i] = retained.len();
                retained.push(self.retained[i]);
            }
        }
        let mut adj = vec![Vec::new(); retained.len()];
        let mut in_adj = vec![Vec::new(); if self.is_directed() { retained.len() } else { 0 }];
        let mut edge_count = 0usize;
        for (i, nbrs) in self.adj.iter().enumerate() {
            if !keep[i] {
                continue;
            }
            for &j in nbrs {
                if !keep[j as usize] {
                    continue;
                }
                adj[new_index[i]].push(new_index[j as usize] as u32);
                if self.is_directed() {
                    in_adj[new_index[j as usize]].push(new_index[i] as u32);
                    edge_count += 1;
                } else if new_index[i] < new_index[j as usize] {
                    edge_count += 1;
                }
            }
        }
        if edge_count == 0 {
            return Err(Error::EmptyWorld { sign: self.sign, mode: self.mode });
        }
        for list in adj.iter_mut().chain(in_adj.iter_mut()) {
            list.sort_unstable();
        }
        Ok(GraphView { mode: self.mode, sign: self.sign, retained, adj, in_adj, edge_count })
    }

    /// The view restricted to nodes with nonzero degree (nonzero total
    /// degree when directed). Returns a clone when nothing is isolated.
    pub fn without_isolated(&self) -> Result<GraphView> {
        let keep: Vec<bool> = (0..self.n())
            .map(|i| {
                !self.adj[i].is_empty()
                    || (self.is_directed() && !self.in_adj[i].is_empty())
            })
            .collect();
        if keep.iter().all(|&k| k) {
            return Ok(self.clone());
        }
        self.induced(&keep)
    }

    /// Builds an undirected view directly from edge pairs over `n` dense
    /// nodes; `retained` carries the original ids (identity when `None`).
    pub fn from_undirected_edges(
        n: usize,
        edges: &[(u32, u32)],
        sign: Sign,
        mode: ViewMode,
        retained: Option<Vec<u32>>,
    ) -> Result<GraphView> {
        assert!(mode != ViewMode::Directed);
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for node in [u, v] {
                if node as usize >= n {
                    return Err(Error::EndpointOutOfRange { node, n });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        if set.is_empty() {
            return Err(Error::EmptyWorld { sign, mode });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        let retained = retained.unwrap_or_else(|| (0..n as u32).collect());
        assert_eq!(retained.len(), n);
        Ok(GraphView { mode, sign, retained, adj, in_adj: Vec::new(), edge_count: set.len() })
    }
}

/// Derives a view of one sign world.
///
/// * `Symmetrized`: undirected edge wherever at least one direction exists.
/// * `Reciprocated`: undirected edge only where both directions exist.
/// * `Directed`: the sign's arcs as they are.
///
/// With `drop_isolated`, nodes with zero degree in the resulting adjacency
/// are excluded and `retained` records the survivors. A view with no edges
/// is an error: paradox denominators would vanish.
pub fn make_view(
    g: &SignedDigraph,
    sign: Sign,
    mode: ViewMode,
    drop_isolated: bool,
) -> Result<GraphView> {
    let arcs: &BTreeSet<(u32, u32)> = match sign {
        Sign::Positive => &g.pos,
        Sign::Negative => &g.neg,
    };
    let n = g.n;
    let mut adj = vec![Vec::new(); n];
    let mut in_adj = vec![Vec::new(); if mode == ViewMode::Directed { n } else { 0 }];
    let mut edge_count = 0usize;
    match mode {
        ViewMode::Directed => {
            for &(u, v) in arcs {
                adj[u as usize].push(v);
                in_adj[v as usize].push(u);
                edge_count += 1;
            }
        }
        ViewMode::Symmetrized | ViewMode::Reciprocated => {
            let mut undirected = BTreeSet::new();
            for &(u, v) in arcs {
                let pair = (u.min(v), u.max(v));
                match mode {
                    ViewMode::Symmetrized => {
                        undirected.insert(pair);
                    }
                    ViewMode::Reciprocated => {
                        if arcs.contains(&(v, u)) {
                            undirected.insert(pair);
                        }
                    }
                    ViewMode::Directed => unreachable!(),
                }
            }
            for &(u, v) in &undirected {
                adj[u as usize].push(v);
                adj[v as usize].push(u);
            }
            edge_count = undirected.len();
        }
    }
    if edge_count == 0 {
        return Err(Error::EmptyWorld { sign, mode });
    }
    for list in adj.iter_mut().chain(in_adj.iter_mut()) {
        list.sort_unstable();
    }
    let full = GraphView {
        mode,
        sign,
        retained: (0..n as u32).collect(),
        adj,
        in_adj,
        edge_count,
    };
    if drop_isolated {
        full.without_isolated()
    } else {
        Ok(full)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_pairs(pairs: &[(u32, u32)]) -> Vec<(u32, u32)> {
        pairs.to_vec()
    }

    #[test]
    fn validate_empty_graph() {
        let g = SignedDigraph::new(0);
        let d = validate(&g);
        assert_eq!(d.nodes, 0);
        assert_eq!(d.positive_arcs, 0);
        assert_eq!(d.negative_arcs, 0);
        assert_eq!(d.overlapping_pairs, 0);
        assert_eq!(d.negative_reciprocated_fraction, 0.0);
    }

    #[test]
    fn validate_reciprocated_fractions() {
        let g = SignedDigraph::from_arcs(3, [], dense_pairs(&[(0, 1), (1, 0)])).unwrap();
        assert_eq!(validate(&g).negative_reciprocated_fraction, 1.0);

        let g = SignedDigraph::from_arcs(2, [], dense_pairs(&[(0, 1)])).unwrap();
        assert_eq!(validate(&g).negative_reciprocated_fraction, 0.0);
    }

    #[test]
    fn construction_rejects_malformed_input() {
        assert!(matches!(
            SignedDigraph::from_arcs(3, [(1, 1)], []),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            SignedDigraph::from_arcs(2, [(0, 5)], []),
            Err(Error::EndpointOutOfRange { node: 5, .. })
        ));
        assert!(matches!(
            SignedDigraph::from_arcs(2, [(0, 1), (0, 1)], []),
            Err(Error::DuplicateEdge { .. })
        ));
    }

    #[test]
    fn overlap_is_permitted_and_counted() {
        let g = SignedDigraph::from_arcs(2, [(0, 1)], [(0, 1)]).unwrap();
        assert_eq!(validate(&g).overlapping_pairs, 1);
    }

    #[test]
    fn reciprocated_view_keeps_mutual_edges_only() {
        let g =
            SignedDigraph::from_arcs(4, [], dense_pairs(&[(0, 1), (1, 0), (0, 2)])).unwrap();
        let v = make_view(&g, Sign::Negative, ViewMode::Reciprocated, true).unwrap();
        assert_eq!(v.n(), 2);
        assert_eq!(v.edge_count(), 1);
        assert_eq!(v.retained(), &[0, 1]);
    }

    #[test]
    fn symmetrized_view_keeps_either_direction() {
        let g =
            SignedDigraph::from_arcs(4, [], dense_pairs(&[(0, 1), (1, 0), (0, 2)])).unwrap();
        let v = make_view(&g, Sign::Negative, ViewMode::Symmetrized, false).unwrap();
        assert_eq!(v.n(), 4);
        assert_eq!(v.edge_count(), 2);
        assert_eq!(v.undirected_degrees(), vec![2, 1, 1, 0]);
    }

    #[test]
    fn empty_world_is_an_error() {
        let g = SignedDigraph::from_arcs(3, [], dense_pairs(&[(0, 1)])).unwrap();
        assert!(matches!(
            make_view(&g, Sign::Positive, ViewMode::Symmetrized, false),
            Err(Error::EmptyWorld { sign: Sign::Positive, .. })
        ));
        // a lone unreciprocated arc leaves the reciprocated world empty too
        assert!(matches!(
            make_view(&g, Sign::Negative, ViewMode::Reciprocated, false),
            Err(Error::EmptyWorld { sign: Sign::Negative, .. })
        ));
    }

    #[test]
    fn degrees_of_path_and_star() {
        let path = SignedDigraph::from_arcs(3, [], dense_pairs(&[(0, 1), (1, 2)])).unwrap();
        let v = make_view(&path, Sign::Negative, ViewMode::Symmetrized, false).unwrap();
        assert_eq!(v.undirected_degrees(), vec![1, 2, 1]);

        let star =
            SignedDigraph::from_arcs(4, [], dense_pairs(&[(0, 1), (0, 2), (0, 3)])).unwrap();
        let v = make_view(&star, Sign::Negative, ViewMode::Symmetrized, false).unwrap();
        assert_eq!(v.undirected_degrees(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn directed_degrees_single_arc() {
        let g = SignedDigraph::from_arcs(2, [], dense_pairs(&[(0, 1)])).unwrap();
        let v = make_view(&g, Sign::Negative, ViewMode::Directed, false).unwrap();
        assert_eq!(v.out_degrees(), vec![1, 0]);
        assert_eq!(v.in_degrees(), vec![0, 1]);
    }

    #[test]
    fn walk_vector_matches_hand_values() {
        let path = SignedDigraph::from_arcs(3, [], dense_pairs(&[(0, 1), (1, 2)])).unwrap();
        let v = make_view(&path, Sign::Negative, ViewMode::Symmetrized, false).unwrap();
        assert_eq!(v.walk_vector(1).unwrap(), vec![1, 2, 1]);
        assert_eq!(v.walk_vector(2).unwrap(), vec![2, 2, 2]);

        let path4 =
            SignedDigraph::from_arcs(4, [], dense_pairs(&[(0, 1), (1, 2), (2, 3)])).unwrap();
        let v = make_view(&path4, Sign::Negative, ViewMode::Symmetrized, false).unwrap();
        let w3 = v.walk_vector(3).unwrap();
        assert_eq!(w3.iter().sum::<u64>(), 16);
    }

    #[test]
    fn walk_order_cap() {
        let g = SignedDigraph::from_arcs(2, [], dense_pairs(&[(0, 1)])).unwrap();
        let v = make_view(&g, Sign::Negative, ViewMode::Symmetrized, false).unwrap();
        assert!(matches!(v.walk_vector(10), Err(Error::WalkOrderTooLarge(10))));
    }
}
