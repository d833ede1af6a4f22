//! Exact maximum matching via augmenting paths with blossom contraction.
//!
//! The classic O(V^3) scheme: grow a BFS alternating forest from each
//! unmatched vertex, contract odd cycles (blossoms) to their base, and flip
//! the matching along any augmenting path found. Exact on general graphs,
//! which matters here because hosts are not bipartite.

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

impl<'a> Search<'a> {
    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn lca(&self, a: usize, b: usize) -> usize {
        let n = self.g.vertex_count();
        let mut on_path = vec![false; n];
        let mut v = a;
        loop {
            v = self.base[v];
            on_path[v] = true;
            if self.mate[v] == NONE {
                break; // reached the root, which is unmatched
            }
            v = self.parent[self.mate[v]];
        }
        let mut u = b;
        loop {
            u = self.base[u];
            if on_path[u] {
                return u;
            }
            u = self.parent[self.mate[u]];
        }
    }

    /// Finds an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.vertex_count();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle through the root side: contract the blossom
                    let curbase = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, curbase, to);
                    self.mark_path(to, curbase, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = curbase;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[self.mate[to]] = true;
                    queue.push_back(self.mate[to]);
                }
            }
        }
        None
    }
}

/// Maximum matching; `mate[v]` is `v`'s partner or `None`.
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut search = Search {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
    };
    // greedy seed keeps the number of augmenting phases small
    for v in 0..n {
        if search.mate[v] != NONE {
            continue;
        }
        for u in g.neighbors(v).iter() {
            if search.mate[u] == NONE {
                search.mate[v] = u;
                search.mate[u] = v;
                break;
            }
        }
    }
    for v in 0..n {
        if search.mate[v] != NONE {
            continue;
        }
        if let Some(mut u) = search.find_path(v) {
            while u != NONE {
                let pv = search.parent[u];
                let ppv = search.mate[pv];
                search.mate[u] = pv;
                search.mate[pv] = u;
                u = ppv;
            }
        }
    }
    search
        .mate
        .into_iter()
        .map(|m| if m == NONE { None } else { Some(m) })
        .collect()
}

/// Number of edges in a largest matching.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).iter().flatten().count() / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    /// Independent oracle: maximum matching by exhaustive branching on the
    /// lowest live vertex (skip it, or match it with each neighbor).
    fn nu_exhaustive(g: &Graph, removed: u64) -> usize {
        let n = g.vertex_count();
        let mut v = n;
        for u in 0..n {
            if removed & (1 << u) == 0 && g.neighbor_bits(u) & !removed != 0 {
                v = u;
                break;
            }
        }
        if v == n {
            return 0;
        }
        let mut best = nu_exhaustive(g, removed | (1 << v));
        let mut nb = g.neighbor_bits(v) & !removed;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            best = best.max(1 + nu_exhaustive(g, removed | (1 << v) | (1 << w)));
        }
        best
    }

    fn check(g: &Graph) {
        let mate = maximum_matching(g);
        // validity: symmetric, along edges
        for (v, m) in mate.iter().enumerate() {
            if let Some(u) = m {
                assert_eq!(mate[*u], Some(v));
                assert!(g.has_edge(v, *u));
            }
        }
        assert_eq!(matching_number(g), nu_exhaustive(g, 0), "on {g:?}");
    }

    #[test]
    fn matches_exhaustive_on_assorted_graphs() {
        let spider_221 = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap();
        check(&spider_221);
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::complete(7).unwrap(),
            Graph::complete_bipartite(3, 4).unwrap(),
            Graph::star(6).unwrap(),
            Graph::matching_graph(8).unwrap(),
            Graph::path(8).unwrap(),
            Graph::k_copies(2, &Graph::cycle(3).unwrap()).unwrap(),
        ] {
            check(&g);
        }
    }

    #[test]
    fn spec_values() {
        let spider_221 = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap();
        assert_eq!(matching_number(&spider_221), 3);
        for n in [4usize, 6, 9, 30] {
            let g = Graph::complete(2)
                .unwrap()
                .join(&Graph::empty(n - 2).unwrap())
                .unwrap();
            assert_eq!(matching_number(&g), 2, "K_2 + E_{{n-2}} at n={n}");
        }
        assert_eq!(matching_number(&Graph::cycle(6).unwrap()), 3);
    }

    #[test]
    fn petersen_has_perfect_matching() {
        // outer C_5, inner pentagram, spokes
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        assert_eq!(matching_number(&g), 5);
    }

    #[test]
    fn blossom_chain() {
        // two triangles joined by a path: forces contraction
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 5),
            ],
        )
        .unwrap();
        check(&g);
    }
}
