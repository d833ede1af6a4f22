//! The ten structural parameters of a tree that drive the lower-bound
//! constructions.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching;
use crate::tree::Tree;
use serde::Serialize;

/// Ten parameters of a tree `T` with at least 2 vertices.
///
/// * `ell` — vertices on a longest path.
/// * `p` — most vertices on a path all of whose vertices have degree <= 2
///   in `T`.
/// * `max_deg`, `min_deg` — maximum and minimum degree.
/// * `nu` — edges in a largest matching.
/// * `delta2` — smallest degree larger than 1; `None` only for a single edge.
/// * `m` — min over vertices `v` of the largest component size of `T - v`.
/// * `m2` — min over `v` of the combined size of the two largest components
///   of `T - v`.
/// * `bipartition` — the two color-class sizes `(a, b)`, `a <= b`.
/// * `w` — max over edges of the smaller endpoint degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeParams {
    pub ell: usize,
    pub p: usize,
    pub max_deg: usize,
    pub min_deg: usize,
    pub nu: usize,
    pub delta2: Option<usize>,
    pub m: usize,
    pub m2: usize,
    pub bipartition: (usize, usize),
    pub w: usize,
}

fn bfs_farthest(g: &Graph, from: usize) -> (usize, usize) {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    dist[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    let mut far = (from, 0);
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v).iter() {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                if dist[u] > far.1 {
                    far = (u, dist[u]);
                }
                queue.push_back(u);
            }
        }
    }
    far
}

/// Longest-path vertex count of a tree: diameter + 1 by double BFS.
pub fn longest_path_vertices(t: &Tree) -> usize {
    let g = t.graph();
    let (u, _) = bfs_farthest(g, 0);
    let (_, d) = bfs_farthest(g, u);
    d + 1
}

/// Two color-class sizes of the (unique) bipartition, smaller first.
pub fn bipartition_sizes(g: &Graph) -> (usize, usize) {
    debug_assert!(g.is_connected());
    let n = g.vertex_count();
    let mut side = vec![None; n];
    side[0] = Some(false);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v).iter() {
            if side[u].is_none() {
                side[u] = Some(!side[v].unwrap());
                queue.push_back(u);
            }
        }
    }
    let a = side.iter().filter(|s| **s == Some(false)).count();
    (a.min(n - a), a.max(n - a))
}

/// All ten parameters, each computed exactly from its definition.
pub fn tree_params(t: &Tree) -> Result<TreeParams> {
    let g = t.graph();
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::invalid("tree parameters need at least 2 vertices"));
    }

    let ell = longest_path_vertices(t);

    // p: in a tree, the subgraph induced on degree-<=2 vertices is a disjoint
    // union of paths, so p is its largest component.
    let low: Vec<usize> = g.vertices().filter(|&v| g.degree(v) <= 2).collect();
    let low_set = low.iter().fold(VertexSet::EMPTY, |acc, &v| acc.with(v));
    let p = g
        .component_sizes_within(low_set)
        .into_iter()
        .max()
        .unwrap_or(0);

    let nu = matching::matching_number(g);

    let delta2 = g.vertices().map(|v| g.degree(v)).filter(|&d| d > 1).min();

    // m, m2: delete each vertex in turn
    let mut m = usize::MAX;
    let mut m2 = usize::MAX;
    for v in g.vertices() {
        let rest = VertexSet::full(n).without(v);
        let mut sizes = g.component_sizes_within(rest);
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        m = m.min(sizes[0]);
        m2 = m2.min(sizes[0] + sizes.get(1).copied().unwrap_or(0));
    }

    let w = g
        .edges()
        .iter()
        .map(|&(u, v)| g.degree(u).min(g.degree(v)))
        .max()
        .unwrap_or(0);

    Ok(TreeParams {
        ell,
        p,
        max_deg: g.max_degree(),
        min_deg: g.min_degree(),
        nu,
        delta2,
        m,
        m2,
        bipartition: bipartition_sizes(g),
        w,
    })
}
