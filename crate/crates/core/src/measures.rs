//! Topological heterogeneity measures: assortativity, starlike strength,
//! degree variance and diversity, transitivity and clustering, normalized
//! betweenness, distance embeddings, and the two plotting transforms.
//!
//! Everything here operates on undirected views; reciprocity is the one
//! arc-level quantity and lives with the graph module.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{make_view, reciprocity, GraphView, Sign, SignedDigraph, ViewMode};
use crate::inversity::{inversity_same, Correlation};

/// Degree assortativity: Pearson correlation of endpoint degrees over all
/// ordered edge incidences. Undefined on regular views.
pub fn assortativity(v: &GraphView) -> Correlation {
    assert!(!v.is_directed());
    let k = v.undirected_degrees();
    let mut a = Vec::with_capacity(2 * v.edge_count());
    let mut b = Vec::with_capacity(2 * v.edge_count());
    for i in 0..v.n() {
        for &j in v.neighbors(i) {
            a.push(k[i] as f64);
            b.push(k[j as usize] as f64);
        }
    }
    match crate::naive::pearson(&a, &b) {
        Some(r) => Correlation::Defined { value: r.clamp(-1.0, 1.0) },
        None => Correlation::Undefined {
            reason: "incidence degrees are constant".to_string(),
        },
    }
}

/// Starlike strength: sum over edges of the squared difference of inverse
/// square-root endpoint degrees, normalized so a star scores exactly 1.
/// Zero on regular views.
pub fn estrada_index(v: &GraphView) -> Result<f64> {
    assert!(!v.is_directed());
    let n = v.n();
    if n < 3 {
        return Err(Error::TooSmall { need: 3 });
    }
    let k = v.undirected_degrees();
    let mut total = 0.0;
    for (i, j) in v.undirected_edges() {
        let a = 1.0 / (k[i as usize] as f64).sqrt();
        let b = 1.0 / (k[j as usize] as f64).sqrt();
        total += (a - b) * (a - b);
    }
    Ok(total / (n as f64 - 2.0 * ((n - 1) as f64).sqrt()))
}

/// Population variance of the degree vector.
pub fn degree_variance(v: &GraphView) -> f64 {
    let k = v.undirected_degrees();
    let n = k.len() as f64;
    let mean = k.iter().sum::<u64>() as f64 / n;
    k.iter().map(|&d| (d as f64 - mean) * (d as f64 - mean)).sum::<f64>() / n
}

/// Degree diversity: sqrt of h^2 = (1/n) * sum over observed degree values
/// of (1 - P(k))^2, relative to its maximum 1 - 3/n + (n+2)/n^3. Zero on
/// regular views, 1 when n-1 distinct degrees are present.
pub fn degree_diversity(v: &GraphView) -> f64 {
    let k = v.undirected_degrees();
    let n = k.len() as f64;
    let mut counts: std::collections::BTreeMap<u64, usize> = std::collections::BTreeMap::new();
    for &d in &k {
        *counts.entry(d).or_insert(0) += 1;
    }
    let h2: f64 = counts
        .values()
        .map(|&c| {
            let p = c as f64 / n;
            (1.0 - p) * (1.0 - p)
        })
        .sum::<f64>()
        / n;
    let h_het = 1.0 - 3.0 / n + (n + 2.0) / (n * n * n);
    (h2 / h_het).sqrt()
}

fn triangle_counts(v: &GraphView) -> (u64, Vec<u64>) {
    // per-node triangle membership by neighbor-set intersection
    let n = v.n();
    let sets: Vec<std::collections::BTreeSet<u32>> =
        (0..n).map(|i| v.neighbors(i).iter().copied().collect()).collect();
    let mut per_node = vec![0u64; n];
    let mut total = 0u64;
    for (i, j) in v.undirected_edges() {
        let common = sets[i as usize].intersection(&sets[j as usize]).count() as u64;
        // each triangle on edge {i, j} is seen once per edge, three edges per
        // triangle
        per_node[i as usize] += common;
        per_node[j as usize] += common;
        total += common;
    }
    // per_node now counts each triangle at i twice (once per incident
    // triangle edge); total counts each triangle three times
    for c in per_node.iter_mut() {
        *c /= 2;
    }
    (total / 3, per_node)
}

/// Global transitivity: three times the triangle count over the number of
/// connected triples (open plus closed).
pub fn transitivity(v: &GraphView) -> f64 {
    let (triangles, _) = triangle_counts(v);
    let triads: u64 = v.undirected_degrees().iter().map(|&d| d * d.saturating_sub(1) / 2).sum();
    if triads == 0 {
        return 0.0;
    }
    3.0 * triangles as f64 / triads as f64
}

/// Mean local clustering; nodes of degree < 2 contribute 0.
pub fn clustering_mean(v: &GraphView) -> f64 {
    let (_, per_node) = triangle_counts(v);
    let k = v.undirected_degrees();
    let n = v.n() as f64;
    let mut total = 0.0;
    for i in 0..v.n() {
        if k[i] >= 2 {
            total += per_node[i] as f64 / (k[i] * (k[i] - 1) / 2) as f64;
        }
    }
    total / n
}

/// Per-node shortest-path betweenness (Brandes), with each unordered pair
/// counted once and divided by (n-1)(n-2)/2 so a star center scores 1.
pub fn betweenness_normalized(v: &GraphView) -> Result<Vec<f64>> {
    assert!(!v.is_directed());
    let n = v.n();
    if n < 3 {
        return Err(Error::TooSmall { need: 3 });
    }
    let mut bc = vec![0.0f64; n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![-1i64; n];
    let mut delta = vec![0.0f64; n];
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    let mut queue: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    for s in 0..n {
        for i in 0..n {
            sigma[i] = 0.0;
            dist[i] = -1;
            delta[i] = 0.0;
            preds[i].clear();
        }
        sigma[s] = 1.0;
        dist[s] = 0;
        stack.clear();
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            stack.push(u);
            for &w in v.neighbors(u) {
                let w = w as usize;
                if dist[w] < 0 {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[u] + 1 {
                    sigma[w] += sigma[u];
                    preds[w].push(u);
                }
            }
        }
        while let Some(w) = stack.pop() {
            for &u in &preds[w] {
                delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }
    // Brandes accumulates each unordered pair from both endpoints
    let norm = ((n - 1) * (n - 2)) as f64 / 2.0;
    Ok(bc.iter().map(|&b| b / 2.0 / norm).collect())
}

/// Per-node distance statistics, normalized by the diameter of the node's
/// connected component. `None` entries mark singleton components.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeEmbedding {
    pub mean_distance: Vec<Option<f64>>,
    pub sd_distance: Vec<Option<f64>>,
    pub component: Vec<usize>,
}

pub fn node_location_embedding(v: &GraphView) -> NodeEmbedding {
    assert!(!v.is_directed());
    let n = v.n();
    let mut component = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![start];
        component[start] = id;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in v.neighbors(u) {
                let w = w as usize;
                if component[w] == usize::MAX {
                    component[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        comps.push(members);
    }

    let bfs = |src: usize| -> Vec<i64> {
        let mut dist = vec![-1i64; n];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &w in v.neighbors(u) {
                let w = w as usize;
                if dist[w] < 0 {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    };

    let mut mean_distance = vec![None; n];
    let mut sd_distance = vec![None; n];
    for members in &comps {
        if members.len() < 2 {
            continue;
        }
        let dists: Vec<(usize, Vec<i64>)> =
            members.iter().map(|&u| (u, bfs(u))).collect();
        let diameter = dists
            .iter()
            .flat_map(|(_, d)| d.iter().copied().filter(|&x| x > 0))
            .max()
            .unwrap() as f64;
        for (u, d) in &dists {
            let others: Vec<f64> = members
                .iter()
                .filter(|&&w| w != *u)
                .map(|&w| d[w] as f64)
                .collect();
            let m = others.iter().sum::<f64>() / others.len() as f64;
            let var =
                others.iter().map(|&x| (x - m) * (x - m)).sum::<f64>() / others.len() as f64;
            mean_distance[*u] = Some(m / diameter);
            sd_distance[*u] = Some(var.sqrt() / diameter);
        }
    }
    NodeEmbedding { mean_distance, sd_distance, component }
}

pub fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// Symmetric zero-preserving log transform: sign(x) * log10(1 + |x|).
pub fn signed_pseudo_log(x: f64) -> f64 {
    x.signum() * (1.0 + x.abs()).log10()
}

/// The full measure battery for one sign world under one undirected view
/// mode.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HeterogeneityProfile {
    pub assortativity: Correlation,
    pub estrada: f64,
    pub degree_variance: f64,
    pub degree_diversity: f64,
    pub inversity: Correlation,
    pub transitivity: f64,
    pub mean_clustering: f64,
    pub normalized_betweenness: Vec<f64>,
    pub reciprocity: f64,
}

pub fn heterogeneity_profile(
    g: &SignedDigraph,
    sign: Sign,
    mode: ViewMode,
) -> Result<HeterogeneityProfile> {
    assert_ne!(mode, ViewMode::Directed);
    let v = make_view(g, sign, mode, false)?;
    Ok(HeterogeneityProfile {
        assortativity: assortativity(&v),
        estrada: estrada_index(&v)?,
        degree_variance: degree_variance(&v),
        degree_diversity: degree_diversity(&v),
        inversity: inversity_same(&v),
        transitivity: transitivity(&v),
        mean_clustering: clustering_mean(&v),
        normalized_betweenness: betweenness_normalized(&v)?,
        reciprocity: reciprocity(g, sign)?,
    })
}
