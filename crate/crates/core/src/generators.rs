//! Synthetic signed networks: random, structured, and configuration-model
//! graphs with a controllable sign-degree coupling, plus the catalog of
//! small named graphs the tests and CLI share.
//!
//! All generation is deterministic for a given seed; the random source is
//! ChaCha8 seeded with the spec's 64-bit seed, which makes edge sets
//! portable across platforms.
//!
//! ```
//! use signed_paradox::generators::{generate, GeneratorKind, GeneratorSpec};
//! use signed_paradox::graph::Sign;
//!
//! let spec = GeneratorSpec {
//!     kind: GeneratorKind::ErdosRenyiSigned { n: 40, p_pos: 0.1, p_neg: 0.1 },
//!     seed: 7,
//! };
//! let g = generate(&spec)?;
//! assert_eq!(g.n(), 40);
//! assert!(g.arc_count(Sign::Positive) > 0);
//! // same seed, same graph
//! assert_eq!(g, generate(&spec)?);
//! # Ok::<(), signed_paradox::error::Error>(())
//! ```

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedDigraph};

/// How the positive and negative degree sequences are matched to nodes in
/// the configuration model: matched rank order plants positive covariance
/// between the two degrees, opposed rank order negative, and a random
/// assignment leaves them uncoupled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coupling {
    Independent,
    Comonotone,
    Antimonotone,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorKind {
    /// Independent Bernoulli draw per ordered node pair and sign; arcs are
    /// directed, so reciprocity is low at small probabilities.
    ErdosRenyiSigned { n: usize, p_pos: f64, p_neg: f64 },
    /// Exact degree sequences per sign, realized as undirected simple
    /// graphs and emitted as reciprocal arc pairs.
    ConfigurationSigned {
        pos_degrees: Vec<u64>,
        neg_degrees: Vec<u64>,
        coupling: Coupling,
    },
    Star { n: usize, sign: Sign },
    /// Circulant k-regular graph.
    Regular { n: usize, k: usize, sign: Sign },
    Path { n: usize, sign: Sign },
    Complete { n: usize, sign: Sign },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub kind: GeneratorKind,
    pub seed: u64,
}

/// Erdős–Gallai feasibility for an undirected simple graph.
pub fn is_graphical(degrees: &[u64]) -> bool {
    let n = degrees.len();
    let mut d: Vec<u64> = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let total: u64 = d.iter().sum();
    if total % 2 != 0 {
        return false;
    }
    if d.first().map_or(false, |&m| m as usize >= n) {
        return false;
    }
    let mut prefix: u128 = 0;
    for k in 1..=n {
        prefix += d[k - 1] as u128;
        let mut rest: u128 = 0;
        for &di in &d[k..] {
            rest += di.min(k as u64) as u128;
        }
        if prefix > (k as u128) * (k as u128 - 1) + rest {
            return false;
        }
    }
    true
}

/// Realizes a degree sequence as a simple undirected edge set by stub
/// matching, repairing self-loops and duplicates with bounded double-edge
/// swaps.
fn realize_sequence(degrees: &[u64], rng: &mut ChaCha8Rng) -> Result<BTreeSet<(u32, u32)>> {
    if !is_graphical(degrees) {
        return Err(Error::NonGraphical);
    }
    let mut stubs: Vec<u32> = Vec::new();
    for (i, &d) in degrees.iter().enumerate() {
        for _ in 0..d {
            stubs.push(i as u32);
        }
    }
    if stubs.is_empty() {
        return Ok(BTreeSet::new());
    }
    stubs.shuffle(rng);
    let mut edges: Vec<(u32, u32)> = stubs
        .chunks(2)
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
        .collect();

    let m = edges.len();
    let limit = 100 * m;
    let mut swaps = 0usize;
    loop {
        let mut seen: std::collections::HashSet<(u32, u32)> = std::collections::HashSet::new();
        let mut bad: Vec<usize> = Vec::new();
        for (idx, &(u, v)) in edges.iter().enumerate() {
            if u == v || !seen.insert((u, v)) {
                bad.push(idx);
            }
        }
        if bad.is_empty() {
            break;
        }
        // swap each offending edge against a random partner
        for &idx in &bad {
            if swaps >= limit {
                return Err(Error::GenerationFailure { swaps });
            }
            swaps += 1;
            let other = rng.random_range(0..m);
            if other == idx {
                continue;
            }
            let (a, b) = edges[idx];
            let (c, d) = edges[other];
            let (p, q) = if rng.random_bool(0.5) { ((a, c), (b, d)) } else { ((a, d), (b, c)) };
            let norm = |(x, y): (u32, u32)| (x.min(y), x.max(y));
            let (p, q) = (norm(p), norm(q));
            if p.0 == p.1 || q.0 == q.1 || p == q {
                continue;
            }
            let exists = |e: (u32, u32)| {
                edges
                    .iter()
                    .enumerate()
                    .any(|(i, &f)| f == e && i != idx && i != other)
            };
            if exists(p) || exists(q) {
                continue;
            }
            edges[idx] = p;
            edges[other] = q;
        }
    }
    Ok(edges.into_iter().collect())
}

/// Assigns a degree multiset to nodes according to the coupling against the
/// anchor (negative) sequence, which is placed in descending order.
fn couple_sequences(
    pos: &[u64],
    neg: &[u64],
    coupling: Coupling,
    rng: &mut ChaCha8Rng,
) -> (Vec<u64>, Vec<u64>) {
    let mut neg_sorted = neg.to_vec();
    neg_sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut pos_sorted = pos.to_vec();
    match coupling {
        Coupling::Comonotone => pos_sorted.sort_unstable_by(|a, b| b.cmp(a)),
        Coupling::Antimonotone => pos_sorted.sort_unstable(),
        Coupling::Independent => pos_sorted.shuffle(rng),
    }
    (pos_sorted, neg_sorted)
}

pub fn generate(spec: &GeneratorSpec) -> Result<SignedDigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match &spec.kind {
        GeneratorKind::ErdosRenyiSigned { n, p_pos, p_neg } => {
            if !(0.0..=1.0).contains(p_pos) || !(0.0..=1.0).contains(p_neg) {
                return Err(Error::InvalidGeneratorSpec(
                    "edge probabilities must lie in [0, 1]".to_string(),
                ));
            }
            let mut g = SignedDigraph::new(*n);
            for u in 0..*n as u32 {
                for v in 0..*n as u32 {
                    if u == v {
                        continue;
                    }
                    if rng.random_bool(*p_pos) {
                        g.add_arc(Sign::Positive, u, v)?;
                    }
                    if rng.random_bool(*p_neg) {
                        g.add_arc(Sign::Negative, u, v)?;
                    }
                }
            }
            Ok(g)
        }
        GeneratorKind::ConfigurationSigned { pos_degrees, neg_degrees, coupling } => {
            if pos_degrees.len() != neg_degrees.len() {
                return Err(Error::SequenceLength {
                    expected: neg_degrees.len(),
                    got: pos_degrees.len(),
                });
            }
            let (pos_seq, neg_seq) = couple_sequences(pos_degrees, neg_degrees, *coupling, &mut rng);
            let pos_edges = realize_sequence(&pos_seq, &mut rng)?;
            let neg_edges = realize_sequence(&neg_seq, &mut rng)?;
            let mut g = SignedDigraph::new(pos_seq.len());
            for &(u, v) in &pos_edges {
                g.add_arc(Sign::Positive, u, v)?;
                g.add_arc(Sign::Positive, v, u)?;
            }
            for &(u, v) in &neg_edges {
                g.add_arc(Sign::Negative, u, v)?;
                g.add_arc(Sign::Negative, v, u)?;
            }
            Ok(g)
        }
        GeneratorKind::Star { n, sign } => {
            if *n < 2 {
                return Err(Error::InvalidGeneratorSpec("star needs n >= 2".to_string()));
            }
            let mut g = SignedDigraph::new(*n);
            for leaf in 1..*n as u32 {
                g.add_arc(*sign, 0, leaf)?;
            }
            Ok(g)
        }
        GeneratorKind::Regular { n, k, sign } => {
            if *k >= *n || n * k % 2 != 0 {
                return Err(Error::InvalidGeneratorSpec(format!(
                    "no {k}-regular simple graph on {n} nodes"
                )));
            }
            let mut g = SignedDigraph::new(*n);
            for i in 0..*n {
                for step in 1..=(*k / 2) {
                    g.add_arc(*sign, i as u32, ((i + step) % n) as u32)?;
                }
            }
            if k % 2 == 1 {
                for i in 0..n / 2 {
                    g.add_arc(*sign, i as u32, (i + n / 2) as u32)?;
                }
            }
            Ok(g)
        }
        GeneratorKind::Path { n, sign } => {
            if *n < 2 {
                return Err(Error::InvalidGeneratorSpec("path needs n >= 2".to_string()));
            }
            let mut g = SignedDigraph::new(*n);
            for i in 0..(*n as u32 - 1) {
                g.add_arc(*sign, i, i + 1)?;
            }
            Ok(g)
        }
        GeneratorKind::Complete { n, sign } => {
            if *n < 2 {
                return Err(Error::InvalidGeneratorSpec("complete graph needs n >= 2".to_string()));
            }
            let mut g = SignedDigraph::new(*n);
            for u in 0..*n as u32 {
                for v in (u + 1)..*n as u32 {
                    g.add_arc(*sign, u, v)?;
                }
            }
            Ok(g)
        }
    }
}

/// A named small graph with the closed-form values the test suite pins.
pub struct Fixture {
    pub name: &'static str,
    pub graph: SignedDigraph,
    /// (quantity label, expected value) pairs; labels match report keys.
    pub expected: Vec<(&'static str, f64)>,
}

/// The shared catalog of hand-verified graphs. All edges appear as
/// reciprocal arc pairs so that symmetrized and reciprocated views agree.
pub fn reference_fixtures() -> Vec<Fixture> {
    fn undirected(n: usize, sign: Sign, edges: &[(u32, u32)]) -> SignedDigraph {
        let mut g = SignedDigraph::new(n);
        for &(u, v) in edges {
            g.add_arc(sign, u, v).unwrap();
            g.add_arc(sign, v, u).unwrap();
        }
        g
    }

    let mut fixtures = Vec::new();

    fixtures.push(Fixture {
        name: "path3",
        graph: undirected(3, Sign::Negative, &[(0, 1), (1, 2)]),
        expected: vec![
            ("delta_global_same", -1.0 / 6.0),
            ("delta_local_same", -1.0 / 3.0),
            ("gap_lhs", 1.0 / 6.0),
            ("inversity", 1.0),
        ],
    });

    fixtures.push(Fixture {
        name: "path4",
        graph: undirected(4, Sign::Negative, &[(0, 1), (1, 2), (2, 3)]),
        expected: vec![
            ("delta_global_higher_l2", -0.1),
            ("delta_local_higher_l2", -1.25),
        ],
    });

    fixtures.push(Fixture {
        name: "star4",
        graph: undirected(4, Sign::Negative, &[(0, 1), (0, 2), (0, 3)]),
        expected: vec![
            ("delta_global_same", -0.5),
            ("delta_local_same", -1.0),
            ("degree_variance", 0.75),
            ("estrada", 1.0),
        ],
    });

    fixtures.push(Fixture {
        name: "k3",
        graph: undirected(3, Sign::Negative, &[(0, 1), (1, 2), (0, 2)]),
        expected: vec![
            ("delta_global_same", 0.0),
            ("delta_local_same", 0.0),
            ("transitivity", 1.0),
        ],
    });

    fixtures.push(Fixture {
        name: "k4",
        graph: undirected(4, Sign::Negative, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        expected: vec![
            ("delta_global_same", 0.0),
            ("delta_local_same", 0.0),
            ("degree_variance", 0.0),
        ],
    });

    fixtures.push(Fixture {
        name: "dyad",
        graph: undirected(2, Sign::Negative, &[(0, 1)]),
        expected: vec![("delta_global_same", 0.0), ("delta_local_same", 0.0)],
    });

    let mut mixed3 = SignedDigraph::new(3);
    mixed3.add_arc(Sign::Positive, 0, 1).unwrap();
    mixed3.add_arc(Sign::Positive, 1, 0).unwrap();
    mixed3.add_arc(Sign::Negative, 1, 2).unwrap();
    mixed3.add_arc(Sign::Negative, 2, 1).unwrap();
    fixtures.push(Fixture {
        name: "mixed3",
        graph: mixed3,
        expected: vec![
            ("delta_global_mixed_pos_walk", 1.0 / 6.0),
            ("delta_local_mixed_pos_walk", 0.0),
        ],
    });

    fixtures
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_view, ViewMode};
    use crate::paradox::degree_pair_numerator;

    fn spec(kind: GeneratorKind, seed: u64) -> GeneratorSpec {
        GeneratorSpec { kind, seed }
    }

    #[test]
    fn determinism() {
        let s = spec(GeneratorKind::ErdosRenyiSigned { n: 30, p_pos: 0.1, p_neg: 0.05 }, 7);
        let g1 = generate(&s).unwrap();
        let g2 = generate(&s).unwrap();
        assert_eq!(g1, g2);
    }

    #[test]
    fn star_and_regular_shapes() {
        let g = generate(&spec(GeneratorKind::Star { n: 5, sign: Sign::Negative }, 0)).unwrap();
        assert_eq!(g.arc_count(Sign::Negative), 4);
        assert!(g.arcs(Sign::Negative).all(|(u, _)| u == 0));

        let g =
            generate(&spec(GeneratorKind::Regular { n: 6, k: 2, sign: Sign::Negative }, 0)).unwrap();
        let v = make_view(&g, Sign::Negative, ViewMode::Symmetrized, false).unwrap();
        assert!(v.undirected_degrees().iter().all(|&d| d == 2));

        let g =
            generate(&spec(GeneratorKind::Regular { n: 6, k: 3, sign: Sign::Negative }, 0)).unwrap();
        let v = make_view(&g, Sign::Negative, ViewMode::Symmetrized, false).unwrap();
        assert!(v.undirected_degrees().iter().all(|&d| d == 3));

        assert!(generate(&spec(GeneratorKind::Regular { n: 5, k: 3, sign: Sign::Negative }, 0))
            .is_err());
    }

    #[test]
    fn graphicality() {
        assert!(is_graphical(&[2, 2, 2]));
        assert!(is_graphical(&[3, 1, 1, 1]));
        assert!(!is_graphical(&[1, 1, 1])); // odd sum
        assert!(!is_graphical(&[3, 1, 1])); // max degree too large
        assert!(!is_graphical(&[4, 4, 2, 1, 1])); // Erdős–Gallai violation
    }

    #[test]
    fn configuration_realizes_sequences_exactly() {
        let pos: Vec<u64> = vec![5, 4, 3, 3, 2, 2, 2, 1, 1, 1];
        let neg: Vec<u64> = vec![4, 3, 3, 2, 2, 2, 1, 1, 1, 1];
        for seed in 0..20 {
            let g = generate(&spec(
                GeneratorKind::ConfigurationSigned {
                    pos_degrees: pos.clone(),
                    neg_degrees: neg.clone(),
                    coupling: Coupling::Comonotone,
                },
                seed,
            ))
            .unwrap();
            for (sign, want) in [(Sign::Positive, &pos), (Sign::Negative, &neg)] {
                for mode in [ViewMode::Symmetrized, ViewMode::Reciprocated] {
                    let v = make_view(&g, sign, mode, false).unwrap();
                    let mut got = v.undirected_degrees();
                    got.sort_unstable_by(|a, b| b.cmp(a));
                    let mut expect = want.clone();
                    expect.sort_unstable_by(|a, b| b.cmp(a));
                    assert_eq!(got, expect, "seed {seed} sign {sign} mode {mode}");
                }
            }
        }
    }

    #[test]
    fn coupling_plants_covariance_sign() {
        let pos: Vec<u64> = vec![6, 5, 4, 3, 2, 2, 1, 1, 1, 1];
        let neg: Vec<u64> = vec![5, 4, 4, 3, 2, 1, 1, 1, 1, 2];
        for seed in 0..10 {
            for (coupling, check) in [
                (Coupling::Comonotone, 1i32),
                (Coupling::Antimonotone, -1i32),
            ] {
                let g = generate(&spec(
                    GeneratorKind::ConfigurationSigned {
                        pos_degrees: pos.clone(),
                        neg_degrees: neg.clone(),
                        coupling,
                    },
                    seed,
                ))
                .unwrap();
                let vp = make_view(&g, Sign::Positive, ViewMode::Symmetrized, false).unwrap();
                let vn = make_view(&g, Sign::Negative, ViewMode::Symmetrized, false).unwrap();
                // numerator is -n^2 cov, so comonotone coupling makes it negative
                let num = degree_pair_numerator(&vp.undirected_degrees(), &vn.undirected_degrees());
                assert_eq!(-num.signum() as i32, check, "seed {seed} {coupling:?}");
            }
        }
    }

    #[test]
    fn nongraphical_sequence_rejected() {
        let r = generate(&spec(
            GeneratorKind::ConfigurationSigned {
                pos_degrees: vec![1, 1, 1],
                neg_degrees: vec![0, 0, 0],
                coupling: Coupling::Independent,
            },
            0,
        ));
        assert!(matches!(r, Err(Error::NonGraphical)));
    }

    #[test]
    fn fixture_catalog_values_hold() {
        use crate::paradox::{delta_global_same, delta_local_same};
        for f in reference_fixtures() {
            for (label, want) in &f.expected {
                match *label {
                    "delta_global_same" => {
                        let v = make_view(&f.graph, Sign::Negative, ViewMode::Symmetrized, false)
                            .unwrap();
                        assert!(
                            (delta_global_same(&v).unwrap() - want).abs() < 1e-12,
                            "{}",
                            f.name
                        );
                    }
                    "delta_local_same" => {
                        let v = make_view(&f.graph, Sign::Negative, ViewMode::Symmetrized, false)
                            .unwrap();
                        assert!(
                            (delta_local_same(&v).unwrap().delta_l - want).abs() < 1e-12,
                            "{}",
                            f.name
                        );
                    }
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn spec_round_trips_through_json() {
        let s = spec(
            GeneratorKind::ConfigurationSigned {
                pos_degrees: vec![2, 1, 1],
                neg_degrees: vec![1, 1, 0],
                coupling: Coupling::Antimonotone,
            },
            42,
        );
        let text = serde_json::to_string(&s).unwrap();
        let back: GeneratorSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }
}
