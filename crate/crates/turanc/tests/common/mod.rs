//! Independent oracles shared by the integration suites. Everything here is
//! deliberately plain brute force with no shared code paths into the
//! library's optimized implementations.

#![allow(dead_code)]

use turanc::{Graph, Tree};

/// Exhaustive subtree containment: try every injective map in raw index
/// order, checking pattern edges as soon as both endpoints are placed.
pub fn embeds_exhaustive(host: &Graph, t: &Tree) -> bool {
    fn rec(host: &Graph, t: &Tree, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == t.vertex_count() {
            return true;
        }
        for hv in 0..host.vertex_count() {
            if used[hv] {
                continue;
            }
            if (0..i).all(|j| !t.graph().has_edge(j, i) || host.has_edge(map[j], hv)) {
                map.push(hv);
                used[hv] = true;
                if rec(host, t, map, used) {
                    return true;
                }
                map.pop();
                used[hv] = false;
            }
        }
        false
    }
    if t.vertex_count() > host.vertex_count() {
        return false;
    }
    rec(
        host,
        t,
        &mut Vec::new(),
        &mut vec![false; host.vertex_count()],
    )
}

/// Exhaustive maximum matching: branch on the lowest live vertex.
pub fn nu_exhaustive(g: &Graph) -> usize {
    fn rec(g: &Graph, removed: u64) -> usize {
        let n = g.vertex_count();
        let mut pick = n;
        for v in 0..n {
            if removed & (1 << v) == 0 && g.neighbors(v).bits() & !removed != 0 {
                pick = v;
                break;
            }
        }
        if pick == n {
            return 0;
        }
        let mut best = rec(g, removed | (1 << pick));
        let mut nb = g.neighbors(pick).bits() & !removed;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            best = best.max(1 + rec(g, removed | (1 << pick) | (1 << w)));
        }
        best
    }
    rec(g, 0)
}

/// All simple paths, reported as (max vertices overall, max vertices over
/// paths whose vertices all have degree <= 2 in g).
pub fn path_oracles(g: &Graph) -> (usize, usize) {
    fn extend(
        g: &Graph,
        last: usize,
        used: u64,
        len: usize,
        low_ok: bool,
        best: &mut usize,
        best_low: &mut usize,
    ) {
        *best = (*best).max(len);
        if low_ok {
            *best_low = (*best_low).max(len);
        }
        let mut nb = g.neighbors(last).bits() & !used;
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            extend(
                g,
                v,
                used | (1 << v),
                len + 1,
                low_ok && g.degree(v) <= 2,
                best,
                best_low,
            );
        }
    }
    let mut best = 0;
    let mut best_low = 0;
    for v in 0..g.vertex_count() {
        extend(g, v, 1 << v, 1, g.degree(v) <= 2, &mut best, &mut best_low);
    }
    (best, best_low)
}

/// Branch parameters recomputed from scratch: component sizes of g - v via
/// a union-find pass, minimized over v.
pub fn branch_oracles(g: &Graph) -> (usize, usize) {
    let n = g.vertex_count();
    let mut m = usize::MAX;
    let mut m2 = usize::MAX;
    for v in 0..n {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                parent[x] = find(parent, parent[x]);
            }
            parent[x]
        }
        for (a, b) in g.edges() {
            if a == v || b == v {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut sizes = std::collections::HashMap::new();
        for u in 0..n {
            if u != v {
                *sizes.entry(find(&mut parent, u)).or_insert(0usize) += 1;
            }
        }
        let mut sorted: Vec<usize> = sizes.into_values().collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        m = m.min(sorted[0]);
        m2 = m2.min(sorted[0] + sorted.get(1).copied().unwrap_or(0));
    }
    (m, m2)
}

/// All trees on n vertices, up to isomorphism.
pub fn all_trees(n: usize) -> Vec<Tree> {
    turanc::connected_graphs(n)
        .unwrap()
        .iter()
        .filter(|g| g.edge_count() == n - 1)
        .map(|g| Tree::new(g.clone()).unwrap())
        .collect()
}
