//! Independent slow reimplementations of every delta family, used as
//! oracles by the test suite and the `oracle` CLI subcommand.
//!
//! Nothing here shares code with the fast paths: adjacency is a dense
//! boolean matrix, walk counts come from explicit path enumeration, and
//! every mean is a literal loop. Keep it that way; agreement between the
//! two implementations is the point.

use crate::error::{Error, Result};
use crate::graph::{GraphView, MAX_WALK_ORDER};
use crate::paradox::{DirectedCase, NodeUniverse, WalkRole};

/// Dense adjacency copy of a view. `a[i][j]` is true when the view has an
/// arc (or undirected edge half) from `i` to `j`.
pub struct DenseView {
    pub n: usize,
    pub a: Vec<Vec<bool>>,
    pub directed: bool,
}

impl DenseView {
    pub fn from_view(v: &GraphView) -> Self {
        let n = v.n();
        let mut a = vec![vec![false; n]; n];
        if v.is_directed() {
            for i in 0..n {
                for &j in v.neighbors(i) {
                    a[i][j as usize] = true;
                }
            }
        } else {
            for i in 0..n {
                for &j in v.neighbors(i) {
                    a[i][j as usize] = true;
                    a[j as usize][i] = true;
                }
            }
        }
        DenseView { n, a, directed: v.is_directed() }
    }

    fn degree(&self, i: usize) -> u64 {
        self.a[i].iter().filter(|&&b| b).count() as u64
    }

    fn in_degree(&self, i: usize) -> u64 {
        (0..self.n).filter(|&j| self.a[j][i]).count() as u64
    }

    /// Number of walks of length `ell` starting at `i`, counted by explicit
    /// depth-first enumeration (vertices may repeat; only steps must follow
    /// arcs).
    fn walks_from(&self, i: usize, ell: u32) -> Result<u64> {
        if ell > MAX_WALK_ORDER + 1 {
            return Err(Error::WalkOrderTooLarge(ell));
        }
        if ell == 0 {
            return Ok(1);
        }
        let mut total: u64 = 0;
        for j in 0..self.n {
            if self.a[i][j] {
                total = total
                    .checked_add(self.walks_from(j, ell - 1)?)
                    .ok_or(Error::WalkOverflow { order: ell })?;
            }
        }
        Ok(total)
    }
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Global attribute delta by literal definition: mean over nodes minus mean
/// over the endpoints of every ordered incidence.
pub fn global_attr(v: &GraphView, x: &[f64]) -> f64 {
    let d = DenseView::from_view(v);
    let node_mean = mean(x);
    let mut endpoint_values = Vec::new();
    for i in 0..d.n {
        for j in 0..d.n {
            if d.a[i][j] {
                endpoint_values.push(x[j]);
            }
        }
    }
    node_mean - mean(&endpoint_values)
}

pub fn global_same(v: &GraphView) -> f64 {
    let d = DenseView::from_view(v);
    let x: Vec<f64> = (0..d.n).map(|i| d.degree(i) as f64).collect();
    global_attr(v, &x)
}

pub fn local_attr(v: &GraphView, x: &[f64]) -> f64 {
    let d = DenseView::from_view(v);
    let mut deltas = Vec::new();
    for i in 0..d.n {
        let nbrs: Vec<usize> = (0..d.n).filter(|&j| d.a[i][j]).collect();
        if nbrs.is_empty() {
            continue;
        }
        let nbr_vals: Vec<f64> = nbrs.iter().map(|&j| x[j]).collect();
        deltas.push(x[i] - mean(&nbr_vals));
    }
    mean(&deltas)
}

pub fn local_same(v: &GraphView) -> f64 {
    let d = DenseView::from_view(v);
    let x: Vec<f64> = (0..d.n).map(|i| d.degree(i) as f64).collect();
    local_attr(v, &x)
}

/// Global higher-order delta from raw walk enumeration.
pub fn global_higher(v: &GraphView, ell: u32) -> Result<f64> {
    let d = DenseView::from_view(v);
    let n = d.n as f64;
    let mut s1 = 0.0;
    let mut s_ell = 0.0;
    let mut s_ell1 = 0.0;
    for i in 0..d.n {
        s1 += d.walks_from(i, 1)? as f64;
        s_ell += d.walks_from(i, ell)? as f64;
        s_ell1 += d.walks_from(i, ell + 1)? as f64;
    }
    Ok((s1 * s_ell - s_ell1 * n) / (s_ell * n))
}

/// Local higher-order delta: for each node with nonzero degree, own degree
/// minus (walks of length ell+1 from i, each ending with a known last
/// vertex) ... computed as (sum over ell-walk endpoints of their degree)
/// divided by own degree.
pub fn local_higher(v: &GraphView, ell: u32) -> Result<f64> {
    let d = DenseView::from_view(v);
    let mut deltas = Vec::new();
    for i in 0..d.n {
        let k = d.degree(i);
        if k == 0 {
            continue;
        }
        // sum of endpoint degrees over ell-walks equals the number of
        // (ell+1)-walks from i
        let weighted = d.walks_from(i, ell + 1)? as f64;
        deltas.push(k as f64 - weighted / k as f64);
    }
    Ok(mean(&deltas))
}

/// Directed global delta for one of the four cases, by enumerating arcs.
pub fn directed_global(v: &GraphView, case: DirectedCase, universe: NodeUniverse) -> f64 {
    let d = DenseView::from_view(v);
    let x: Vec<f64> = (0..d.n)
        .map(|i| match case.counted_role() {
            WalkRole::Out => d.degree(i) as f64,
            WalkRole::In => d.in_degree(i) as f64,
        })
        .collect();
    directed_global_attr(v, case.walk_role(), &x, universe)
}

pub fn directed_global_attr(
    v: &GraphView,
    walk_role: WalkRole,
    x: &[f64],
    universe: NodeUniverse,
) -> f64 {
    let d = DenseView::from_view(v);
    let mut endpoint_values = Vec::new();
    for i in 0..d.n {
        for j in 0..d.n {
            if d.a[i][j] {
                endpoint_values.push(match walk_role {
                    WalkRole::In => x[i],
                    WalkRole::Out => x[j],
                });
            }
        }
    }
    let node_values: Vec<f64> = (0..d.n)
        .filter(|&i| match universe {
            NodeUniverse::AllNodes => true,
            NodeUniverse::WalkedNonzero => match walk_role {
                WalkRole::In => d.in_degree(i) > 0,
                WalkRole::Out => d.degree(i) > 0,
            },
        })
        .map(|i| x[i])
        .collect();
    mean(&node_values) - mean(&endpoint_values)
}

pub fn directed_local(v: &GraphView, case: DirectedCase) -> f64 {
    let d = DenseView::from_view(v);
    let x: Vec<f64> = (0..d.n)
        .map(|i| match case.counted_role() {
            WalkRole::Out => d.degree(i) as f64,
            WalkRole::In => d.in_degree(i) as f64,
        })
        .collect();
    directed_local_attr(v, case.walk_role(), &x)
}

pub fn directed_local_attr(v: &GraphView, walk_role: WalkRole, x: &[f64]) -> f64 {
    let d = DenseView::from_view(v);
    let mut deltas = Vec::new();
    for i in 0..d.n {
        let nbrs: Vec<usize> = (0..d.n)
            .filter(|&j| match walk_role {
                WalkRole::Out => d.a[i][j],
                WalkRole::In => d.a[j][i],
            })
            .collect();
        if nbrs.is_empty() {
            continue;
        }
        let vals: Vec<f64> = nbrs.iter().map(|&j| x[j]).collect();
        deltas.push(x[i] - mean(&vals));
    }
    mean(&deltas)
}

/// Sample Pearson correlation by literal definition; `None` when either
/// series has zero variance.
pub fn pearson(a: &[f64], b: &[f64]) -> Option<f64> {
    assert_eq!(a.len(), b.len());
    let n = a.len() as f64;
    let ma = mean(a);
    let mb = mean(b);
    let mut cov = 0.0;
    let mut va = 0.0;
    let mut vb = 0.0;
    for (x, y) in a.iter().zip(b) {
        cov += (x - ma) * (y - mb);
        va += (x - ma) * (x - ma);
        vb += (y - mb) * (y - mb);
    }
    if va == 0.0 || vb == 0.0 {
        return None;
    }
    Some((cov / n) / ((va / n).sqrt() * (vb / n).sqrt()))
}
