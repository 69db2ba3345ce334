//! Greedy, edge-count-preserving rewiring that pushes a view toward the
//! star extreme, maximizing the magnitude of the global or local paradox
//! delta.
//!
//! The global objective climbs on edge relocation: remove one edge, insert
//! one currently absent edge. Relocation subsumes endpoint reattachment and
//! avoids the dead ends reattachment alone runs into, e.g. a saturated hub
//! next to an isolated node that no strictly improving reattachment can
//! touch. The local objective uses endpoint reattachment plus cross-rewiring
//! of paired edges, which preserves every degree. Acceptance is
//! first-improvement over a seeded random candidate order, so runs are
//! deterministic per seed.
//!
//! ```
//! use signed_paradox::generators::{generate, GeneratorKind, GeneratorSpec};
//! use signed_paradox::graph::{make_view, Sign, ViewMode};
//! use signed_paradox::paradox::delta_global_same;
//! use signed_paradox::rewire::{maximize_strength, Objective};
//!
//! // a ring is degree-regular, so its paradox delta starts at exactly zero
//! let spec = GeneratorSpec {
//!     kind: GeneratorKind::Regular { n: 8, k: 2, sign: Sign::Negative },
//!     seed: 0,
//! };
//! let ring = make_view(&generate(&spec)?, Sign::Negative, ViewMode::Symmetrized, false)?;
//! assert_eq!(delta_global_same(&ring)?, 0.0);
//!
//! let (end, trace) = maximize_strength(&ring, Objective::Global, 100, 3)?;
//! assert!(trace.accepted > 0);
//! assert_eq!(end.edge_count(), ring.edge_count());
//! assert!(delta_global_same(&end)?.abs() > 0.5);
//! # Ok::<(), signed_paradox::error::Error>(())
//! ```

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::GraphView;
use crate::measures::{degree_variance, estrada_index};
use crate::paradox::{delta_global_same, delta_local_same};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Global,
    Local,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    Budget,
    NoImprovingMove,
}

/// State snapshot recorded after each accepted move.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RewireStep {
    pub description: String,
    pub delta_g: f64,
    pub delta_l: f64,
    pub degree_variance: f64,
    pub estrada: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RewireTrace {
    pub steps: Vec<RewireStep>,
    pub accepted: usize,
    pub rejected: usize,
    pub stop_reason: StopReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Move {
    /// Replace edge {u, v} with {u, w}: v loses a neighbor, w gains one.
    Reattach { u: u32, v: u32, w: u32 },
    /// Remove edge {u, v}, insert the absent edge {a, b}.
    Relocate { u: u32, v: u32, a: u32, b: u32 },
    /// Replace edges {a, b}, {c, d} with {a, c}, {b, d} (degree-preserving).
    CrossPair { a: u32, b: u32, c: u32, d: u32 },
}

struct EdgeState {
    n: usize,
    edges: BTreeSet<(u32, u32)>,
    degrees: Vec<u64>,
}

impl EdgeState {
    fn from_view(v: &GraphView) -> Self {
        let edges: BTreeSet<(u32, u32)> = v.undirected_edges().into_iter().collect();
        EdgeState { n: v.n(), edges, degrees: v.undirected_degrees() }
    }

    fn has(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    fn apply(&mut self, m: Move) {
        match m {
            Move::Reattach { u, v, w } => {
                self.edges.remove(&(u.min(v), u.max(v)));
                self.edges.insert((u.min(w), u.max(w)));
                self.degrees[v as usize] -= 1;
                self.degrees[w as usize] += 1;
            }
            Move::Relocate { u, v, a, b } => {
                self.edges.remove(&(u.min(v), u.max(v)));
                self.edges.insert((a.min(b), a.max(b)));
                self.degrees[u as usize] -= 1;
                self.degrees[v as usize] -= 1;
                self.degrees[a as usize] += 1;
                self.degrees[b as usize] += 1;
            }
            Move::CrossPair { a, b, c, d } => {
                self.edges.remove(&(a.min(b), a.max(b)));
                self.edges.remove(&(c.min(d), c.max(d)));
                self.edges.insert((a.min(c), a.max(c)));
                self.edges.insert((b.min(d), b.max(d)));
            }
        }
    }

    fn to_view(&self, template: &GraphView) -> Result<GraphView> {
        let edges: Vec<(u32, u32)> = self.edges.iter().copied().collect();
        GraphView::from_undirected_edges(
            self.n,
            &edges,
            template.sign(),
            template.mode(),
            Some(template.retained().to_vec()),
        )
    }

    /// Legal moves in deterministic lexicographic order: simplicity is
    /// checked here, improvement later.
    fn candidates(&self, objective: Objective) -> Vec<Move> {
        let mut moves = Vec::new();
        let edges: Vec<(u32, u32)> = self.edges.iter().copied().collect();
        if objective == Objective::Global {
            let mut absent = Vec::new();
            for a in 0..self.n as u32 {
                for b in (a + 1)..self.n as u32 {
                    if !self.has(a, b) {
                        absent.push((a, b));
                    }
                }
            }
            for &(u, v) in &edges {
                for &(a, b) in &absent {
                    moves.push(Move::Relocate { u, v, a, b });
                }
            }
            return moves;
        }
        for &(p, q) in &edges {
            for (u, v) in [(p, q), (q, p)] {
                // detach v from {u, v}, reattach u to w
                for w in 0..self.n as u32 {
                    if w == u || w == v || self.has(u, w) {
                        continue;
                    }
                    moves.push(Move::Reattach { u, v, w });
                }
            }
        }
        {
            for i in 0..edges.len() {
                for j in (i + 1)..edges.len() {
                    let (a, b) = edges[i];
                    let (c, d) = edges[j];
                    let distinct = |xs: [u32; 4]| {
                        xs.iter().collect::<BTreeSet<_>>().len() == 4
                    };
                    if !distinct([a, b, c, d]) {
                        continue;
                    }
                    for (x, y, z, t) in [(a, b, c, d), (a, b, d, c)] {
                        if !self.has(x, z) && !self.has(y, t) {
                            moves.push(Move::CrossPair { a: x, b: y, c: z, d: t });
                        }
                    }
                }
            }
        }
        moves
    }
}

fn describe(m: Move) -> String {
    match m {
        Move::Reattach { u, v, w } => format!("reattach {{{u},{v}}} -> {{{u},{w}}}"),
        Move::Relocate { u, v, a, b } => format!("relocate {{{u},{v}}} -> {{{a},{b}}}"),
        Move::CrossPair { a, b, c, d } => {
            format!("cross {{{a},{b}}},{{{c},{d}}} -> {{{a},{c}}},{{{b},{d}}}")
        }
    }
}

/// Greedy hill-climb on the chosen objective. Returns the rewired view and
/// a trace with one snapshot per accepted move.
pub fn maximize_strength(
    v: &GraphView,
    objective: Objective,
    budget: usize,
    seed: u64,
) -> Result<(GraphView, RewireTrace)> {
    if v.is_directed() {
        return Err(Error::DirectedViewUnsupported);
    }
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = EdgeState::from_view(v);
    let mut steps = Vec::new();
    let mut accepted = 0usize;
    let mut rejected = 0usize;

    let local_score = |s: &EdgeState, template: &GraphView| -> Result<f64> {
        let view = s.to_view(template)?;
        Ok(delta_local_same(&view)?.delta_l.abs())
    };

    let stop_reason = loop {
        if accepted >= budget {
            break StopReason::Budget;
        }
        let mut candidates = state.candidates(objective);
        candidates.shuffle(&mut rng);

        let mut chosen = None;
        match objective {
            Objective::Global => {
                // at fixed edge count |delta_g| is monotone in the degree
                // square sum, so the gain test is exact integer arithmetic
                for m in candidates {
                    if let Move::Relocate { u, v, a, b } = m {
                        let mut shift = [(u, -1i128), (v, -1), (a, 1), (b, 1)];
                        shift.sort_unstable_by_key(|&(node, _)| node);
                        let mut gain = 0i128;
                        let mut i = 0;
                        while i < 4 {
                            let node = shift[i].0;
                            let mut d = 0i128;
                            while i < 4 && shift[i].0 == node {
                                d += shift[i].1;
                                i += 1;
                            }
                            let k = state.degrees[node as usize] as i128;
                            gain += (k + d) * (k + d) - k * k;
                        }
                        if gain > 0 {
                            chosen = Some(m);
                            break;
                        }
                    }
                    rejected += 1;
                }
            }
            Objective::Local => {
                let before = local_score(&state, v)?;
                for m in candidates {
                    let mut trial = EdgeState {
                        n: state.n,
                        edges: state.edges.clone(),
                        degrees: state.degrees.clone(),
                    };
                    trial.apply(m);
                    if local_score(&trial, v)? > before + 1e-12 {
                        chosen = Some(m);
                        break;
                    }
                    rejected += 1;
                }
            }
        }

        let Some(m) = chosen else {
            break StopReason::NoImprovingMove;
        };
        state.apply(m);
        accepted += 1;
        let view = state.to_view(v)?;
        steps.push(RewireStep {
            description: describe(m),
            delta_g: delta_global_same(&view)?,
            delta_l: delta_local_same(&view)?.delta_l,
            degree_variance: degree_variance(&view),
            estrada: estrada_index(&view).unwrap_or(f64::NAN),
        });
    };

    let final_view = state.to_view(v)?;
    Ok((final_view, RewireTrace { steps, accepted, rejected, stop_reason }))
}
