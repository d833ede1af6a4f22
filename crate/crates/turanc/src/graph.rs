//! Undirected simple graphs on up to 64 labeled vertices.
//!
//! Adjacency is one `u64` bitset per vertex, so neighborhood operations are
//! single word operations. Graphs are immutable values: operations that
//! change a graph return a new one, which keeps enumeration and parallel
//! search race-free.

use crate::error::{Error, Result};
use std::fmt;

pub const MAX_VERTICES: usize = 64;

#[inline(always)]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Set of vertices of a graph with at most 64 vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 & bit(v) != 0
    }

    #[inline]
    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | bit(v))
    }

    #[inline]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !bit(v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Undirected simple graph on `1..=64` labeled vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Graph with `n` vertices and the given edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge_mut(u, v)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn add_edge_mut(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// New graph with the edge `uv` added. Idempotent.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge_mut(u, v)?;
        Ok(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    #[inline]
    pub(crate) fn neighbor_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !(bit(u) | (bit(u) - 1));
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Vertices reachable from `v`.
    pub fn component_containing(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        let mut reached = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u];
            }
            frontier = next & !reached;
            reached |= next;
        }
        VertexSet(reached)
    }

    /// True iff the graph has exactly one component (a single vertex counts).
    pub fn is_connected(&self) -> bool {
        self.component_containing(0).len() == self.n
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = VertexSet::full(self.n);
        let mut out = Vec::new();
        while let Some(v) = remaining.smallest() {
            let comp = self.component_containing(v);
            out.push(comp);
            remaining = remaining.difference(comp);
        }
        out
    }

    /// Component sizes of the subgraph induced on `within`, without reindexing.
    pub(crate) fn component_sizes_within(&self, within: VertexSet) -> Vec<usize> {
        let mask = within.bits();
        let mut remaining = mask;
        let mut sizes = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mut reached = bit(start);
            let mut frontier = bit(start);
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[u] & mask;
                }
                frontier = next & !reached;
                reached |= next;
            }
            sizes.push(reached.count_ones() as usize);
            remaining &= !reached;
        }
        sizes
    }

    /// Join: disjoint union plus all edges between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..g.n {
                g.add_edge_mut(u, v)?;
            }
        }
        Ok(g)
    }

    /// Disjoint union; `other`'s vertices are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        for &row in &other.adj {
            adj.push(row << self.n);
        }
        Ok(Graph { n, adj })
    }

    /// `k` pairwise vertex-disjoint copies of `g`.
    pub fn k_copies(k: usize, g: &Graph) -> Result<Graph> {
        if k == 0 {
            return Err(Error::invalid("k_copies needs k >= 1"));
        }
        let mut out = g.clone();
        for _ in 1..k {
            out = out.disjoint_union(g)?;
        }
        Ok(out)
    }

    /// Relabeled copy: new vertex `i` is old vertex `order[i]`.
    pub fn reordered(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.n);
        let mut pos = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; self.n];
        for (i, &v) in order.iter().enumerate() {
            let mut nb = self.adj[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                adj[i] |= bit(pos[w]);
            }
        }
        Graph { n: self.n, adj }
    }

    /// Copy with vertex `v` removed; higher vertices shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::VertexCount(0));
        }
        let low = bit(v) - 1;
        let mut adj = Vec::with_capacity(self.n - 1);
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let row = self.adj[u];
            adj.push((row & low) | ((row >> 1) & !low));
        }
        Ok(Graph { n: self.n - 1, adj })
    }

    /// Copy with one new vertex (index `n`) adjacent to `nbrs`.
    pub fn add_vertex_with(&self, nbrs: VertexSet) -> Result<Graph> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        debug_assert_eq!(nbrs.bits() & !VertexSet::full(self.n).bits(), 0);
        let mut adj = self.adj.clone();
        let new = self.n;
        adj.push(nbrs.bits());
        let mut nb = nbrs.bits();
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            adj[u] |= bit(new);
        }
        Ok(Graph { n, adj })
    }

    /// Subgraph induced on `set`, reindexed densely in increasing vertex order.
    pub fn induced(&self, set: VertexSet) -> Result<Graph> {
        let verts: Vec<usize> = set.iter().collect();
        if verts.is_empty() || *verts.last().unwrap() >= self.n {
            return Err(Error::invalid("induced set empty or out of range"));
        }
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_mut(i, j)?;
                }
            }
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mask = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| (!self.adj[v]) & mask & !bit(v))
            .collect();
        Graph { n: self.n, adj }
    }

    // ---- named families ----

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let mask = VertexSet::full(n).bits();
        for v in 0..n {
            g.adj[v] = mask & !bit(v);
        }
        Ok(g)
    }

    /// Path on `n` vertices, `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge_mut(v - 1, v)?;
        }
        Ok(g)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle needs n >= 3 (got {n})")));
        }
        let mut g = Graph::path(n)?;
        g.add_edge_mut(n - 1, 0)?;
        Ok(g)
    }

    /// Star with `leaves` leaves; center is vertex 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        let mut g = Graph::empty(leaves + 1)?;
        for v in 1..=leaves {
            g.add_edge_mut(0, v)?;
        }
        Ok(g)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        if a == 0 || b == 0 {
            return Err(Error::invalid(
                "complete_bipartite needs both sides nonempty",
            ));
        }
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.add_edge_mut(u, v)?;
            }
        }
        Ok(g)
    }

    /// Matching on `n` vertices: edges `(0,1), (2,3), ...`; for odd `n` the
    /// last vertex is isolated.
    pub fn matching_graph(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for i in 0..n / 2 {
            g.add_edge_mut(2 * i, 2 * i + 1)?;
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, e={}, {:?})",
            self.n,
            self.edge_count(),
            self.edges()
        )
    }
}
