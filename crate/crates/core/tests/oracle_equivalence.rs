//! Every fast-path delta must agree with the naive loop implementation on
//! random graphs, and the structural view semantics must match a dense
//! boolean oracle.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use signed_paradox::generators::{generate, GeneratorKind, GeneratorSpec};
use signed_paradox::graph::{make_view, GraphView, Sign, SignedDigraph, ViewMode};
use signed_paradox::naive;
use signed_paradox::paradox::*;

const TOL: f64 = 1e-9;

fn random_graph(seed: u64, n: usize, p_pos: f64, p_neg: f64) -> SignedDigraph {
    generate(&GeneratorSpec {
        kind: GeneratorKind::ErdosRenyiSigned { n, p_pos, p_neg },
        seed,
    })
    .unwrap()
}

fn sym_neg(g: &SignedDigraph) -> Option<GraphView> {
    make_view(g, Sign::Negative, ViewMode::Symmetrized, false).ok()
}

#[test]
fn same_world_matches_naive() {
    for seed in 0..100 {
        let g = random_graph(seed, 18, 0.0, 0.12);
        let Some(v) = sym_neg(&g) else { continue };
        assert!(
            (delta_global_same(&v).unwrap() - naive::global_same(&v)).abs() < TOL,
            "seed {seed}"
        );
        assert!(
            (delta_local_same(&v).unwrap().delta_l - naive::local_same(&v)).abs() < TOL,
            "seed {seed}"
        );
    }
}

#[test]
fn generalized_matches_naive() {
    for seed in 0..60 {
        let g = random_graph(seed, 15, 0.0, 0.15);
        let Some(v) = sym_neg(&g) else { continue };
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa77);
        let x: Vec<f64> = (0..v.n()).map(|_| rng.random_range(-3.0..7.0)).collect();
        let attr = AttributeVector::total("x", x.clone());
        assert!(
            (delta_global_generalized(&v, &attr).unwrap() - naive::global_attr(&v, &x)).abs()
                < TOL,
            "seed {seed}"
        );
        assert!(
            (delta_local_generalized(&v, &attr).unwrap().delta_l - naive::local_attr(&v, &x))
                .abs()
                < TOL,
            "seed {seed}"
        );
    }
}

#[test]
fn mixed_matches_naive() {
    for seed in 0..60 {
        let g = random_graph(seed, 16, 0.1, 0.1);
        let (Some(vw), Ok(vc)) =
            (sym_neg(&g), make_view(&g, Sign::Positive, ViewMode::Symmetrized, false))
        else {
            continue;
        };
        let counts: Vec<f64> = vc.undirected_degrees().iter().map(|&d| d as f64).collect();
        assert!(
            (delta_global_mixed(&vw, &counts).unwrap() - naive::global_attr(&vw, &counts)).abs()
                < TOL,
            "seed {seed}"
        );
        assert!(
            (delta_local_mixed(&vw, &counts).unwrap().delta_l - naive::local_attr(&vw, &counts))
                .abs()
                < TOL,
            "seed {seed}"
        );
    }
}

#[test]
fn higher_order_matches_naive_walk_enumeration() {
    for seed in 0..25 {
        let g = random_graph(seed, 12, 0.0, 0.18);
        let Some(v) = sym_neg(&g) else { continue };
        for ell in 1..=4u32 {
            assert!(
                (delta_global_higher(&v, ell).unwrap()
                    - naive::global_higher(&v, ell).unwrap())
                .abs()
                    < TOL,
                "seed {seed} ell {ell}"
            );
            assert!(
                (delta_local_higher(&v, ell).unwrap().delta_l
                    - naive::local_higher(&v, ell).unwrap())
                .abs()
                    < TOL,
                "seed {seed} ell {ell}"
            );
        }
    }
}

#[test]
fn directed_cases_match_naive() {
    for seed in 0..60 {
        let g = random_graph(seed, 14, 0.0, 0.1);
        let Ok(v) = make_view(&g, Sign::Negative, ViewMode::Directed, false) else { continue };
        for case in DirectedCase::ALL {
            for universe in [NodeUniverse::AllNodes, NodeUniverse::WalkedNonzero] {
                let fast = delta_directed_view(&v, case, universe).unwrap();
                let slow_g = naive::directed_global(&v, case, universe);
                assert!((fast.delta_g - slow_g).abs() < TOL, "seed {seed} {case} {universe:?}");
            }
            let fast = delta_directed_view(&v, case, NodeUniverse::AllNodes).unwrap();
            let slow_l = naive::directed_local(&v, case);
            assert!((fast.delta_l - slow_l).abs() < TOL, "seed {seed} {case}");
        }
    }
}

#[test]
fn walk_counts_match_dense_matrix_power() {
    for seed in 0..20 {
        let g = random_graph(seed, 10, 0.0, 0.2);
        let Some(v) = sym_neg(&g) else { continue };
        let n = v.n();
        // dense adjacency, repeated multiply against the ones vector
        let mut a = vec![vec![0u64; n]; n];
        for i in 0..n {
            for &j in v.neighbors(i) {
                a[i][j as usize] = 1;
            }
        }
        let mut vec_ones = vec![1u64; n];
        for ell in 1..=5u32 {
            let next: Vec<u64> = (0..n)
                .map(|i| (0..n).map(|j| a[i][j] * vec_ones[j]).sum())
                .collect();
            vec_ones = next;
            assert_eq!(v.walk_vector(ell).unwrap(), vec_ones, "seed {seed} ell {ell}");
        }
    }
}

#[test]
fn view_semantics_match_boolean_oracle() {
    for seed in 0..40 {
        let g = random_graph(seed, 12, 0.15, 0.0);
        let mut dense = vec![vec![false; 12]; 12];
        for (u, v) in g.arcs(Sign::Positive) {
            dense[u as usize][v as usize] = true;
        }
        if let Ok(v) = make_view(&g, Sign::Positive, ViewMode::Symmetrized, false) {
            for i in 0..12 {
                for j in 0..12 {
                    let expect = dense[i][j] || dense[j][i];
                    let got = v.neighbors(i).contains(&(j as u32));
                    assert_eq!(got, expect, "seed {seed} sym {i},{j}");
                }
            }
        }
        if let Ok(v) = make_view(&g, Sign::Positive, ViewMode::Reciprocated, false) {
            for i in 0..12 {
                for j in 0..12 {
                    let expect = dense[i][j] && dense[j][i];
                    let got = v.neighbors(i).contains(&(j as u32));
                    assert_eq!(got, expect, "seed {seed} rec {i},{j}");
                }
            }
        }
    }
}
