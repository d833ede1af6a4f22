//! Generators for the lower-bound witness graphs: each returns the built
//! graph together with the edge count it claims, and the two are checked to
//! agree, so a generator can never silently under-deliver.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::{tree_params, TreeParams};
use crate::tree::Tree;
use std::collections::BTreeMap;

/// A built witness graph with its claimed edge count and the inputs used.
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub name: &'static str,
    pub graph: Graph,
    pub claimed_edges: usize,
    pub params: BTreeMap<String, i64>,
}

fn params_of(t: &Tree) -> Result<TreeParams> {
    tree_params(t)
}

fn finish(
    name: &'static str,
    graph: Graph,
    n: usize,
    claimed_edges: usize,
    params: BTreeMap<String, i64>,
) -> Result<ConstructionResult> {
    if graph.vertex_count() != n {
        return Err(Error::construction(
            name,
            format!("built {} vertices, wanted {}", graph.vertex_count(), n),
        ));
    }
    if graph.edge_count() != claimed_edges {
        return Err(Error::construction(
            name,
            format!(
                "built {} edges, claimed {}",
                graph.edge_count(),
                claimed_edges
            ),
        ));
    }
    if !graph.is_connected() {
        return Err(Error::construction(name, "built graph is disconnected"));
    }
    Ok(ConstructionResult {
        name,
        graph,
        claimed_edges,
        params,
    })
}

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

fn pmap<const N: usize>(entries: [(&str, i64); N]) -> BTreeMap<String, i64> {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

/// The three-part clique construction: X ∪ Y a clique with |X| = k - 2s,
/// |Y| = s, and Y completely joined to an independent set Z of size
/// n - k + s. Free of paths on k + 1 vertices whenever k > 2s.
pub fn kopylov(n: usize, k: usize, s: usize) -> Result<ConstructionResult> {
    const NAME: &str = "kopylov";
    if s < 1 || k <= 2 * s {
        return Err(Error::construction(
            NAME,
            format!("needs k > 2s >= 2 (got k={k}, s={s})"),
        ));
    }
    if n < k - s {
        return Err(Error::construction(
            NAME,
            format!("needs n >= k - s = {} (got n={n})", k - s),
        ));
    }
    let clique = k - s;
    let mut g = Graph::empty(n)?;
    for u in 0..clique {
        for v in u + 1..clique {
            g.add_edge_mut(u, v)?;
        }
    }
    // Y = the last s clique vertices, joined to Z
    for y in clique - s..clique {
        for z in clique..n {
            g.add_edge_mut(y, z)?;
        }
    }
    let claimed = choose2(clique) + s * (n + s - k);
    finish(
        NAME,
        g,
        n,
        claimed,
        pmap([
            ("k", k as i64),
            ("s", s as i64),
            ("clique", clique as i64),
            ("independent", (n + s - k) as i64),
        ]),
    )
}

/// Longest-path bound witness: the clique construction tuned to exclude all
/// paths on ell(T) vertices. Claims
/// C(ceil(ell/2), 2) + floor((ell-2)/2) * (n - ceil(ell/2)).
pub fn prop2_longest_path(t: &Tree, n: usize) -> Result<ConstructionResult> {
    const NAME: &str = "longest_path";
    let ell = params_of(t)?.ell;
    if ell < 4 {
        return Err(Error::construction(
            NAME,
            format!("needs a longest path of at least 4 vertices (got ell={ell})"),
        ));
    }
    let mut result = kopylov(n, ell - 1, (ell - 2) / 2)?;
    result.name = NAME;
    result.params.insert("ell".into(), ell as i64);
    debug_assert_eq!(
        result.claimed_edges,
        choose2(ell.div_ceil(2)) + (ell - 2) / 2 * (n - ell.div_ceil(2))
    );
    Ok(result)
}

/// Ring of cliques threaded on induced paths: s cliques of size
/// k - 2p(T) - 3, consecutive gate vertices joined by paths with p(T) + 1
/// interior vertices (the last path absorbs the remainder). The claimed
/// count is measured from the built graph; the statement-level formula value
/// is reported separately under "statement_value".
pub fn prop2_induced_path(t: &Tree, n: usize) -> Result<ConstructionResult> {
    const NAME: &str = "induced_path";
    let tp = params_of(t)?;
    let (k, p) = (t.vertex_count(), tp.p);
    if k < 2 * p + 4 {
        return Err(Error::construction(
            NAME,
            format!("needs k - 2p - 3 >= 1 (got k={k}, p={p})"),
        ));
    }
    let b = k - 2 * p - 3;
    let period = k - p - 1; // the proof's divisor: b + p + 2
    if n < period {
        return Err(Error::construction(
            NAME,
            format!("needs n >= k - p - 1 = {period} (got n={n})"),
        ));
    }
    let s = n / period;
    let mut g = Graph::empty(n)?;
    let mut gates = Vec::with_capacity(s);
    let mut next = 0usize;
    for _ in 0..s {
        for u in next..next + b {
            for v in u + 1..next + b {
                g.add_edge_mut(u, v)?;
            }
        }
        gates.push(next);
        next += b;
    }
    // interior path lengths: p + 1 for all but the last, which absorbs the rest
    let mut interior = vec![p + 1; s];
    interior[s - 1] = n - s * b - (s - 1) * (p + 1);
    for i in 0..s {
        let mut prev = gates[i];
        for _ in 0..interior[i] {
            g.add_edge_mut(prev, next)?;
            prev = next;
            next += 1;
        }
        g.add_edge_mut(prev, gates[(i + 1) % s])?;
    }
    debug_assert_eq!(next, n);
    let claimed = s * choose2(b) + (n - s * b) + s;
    let statement = (choose2(b) + p + 2) as i64 * (n / (k - p - 2)) as i64;
    finish(
        NAME,
        g,
        n,
        claimed,
        pmap([
            ("k", k as i64),
            ("p", p as i64),
            ("blocks", s as i64),
            ("block_size", b as i64),
            ("statement_value", statement),
        ]),
    )
}

/// Spider-of-cliques for trees with at least two branch vertices: center v
/// with legs of p(T) + 1 vertices, a clique of size k - p(T) - 1 hung on
/// each leg leaf. Claims the measured edge count; each full block carries
/// C(k-p-1, 2) + p + 2 edges.
pub fn prop2_induced_path_spider(t: &Tree, n: usize) -> Result<ConstructionResult> {
    const NAME: &str = "induced_path_spider";
    let tp = params_of(t)?;
    let (k, p) = (t.vertex_count(), tp.p);
    let branch_vertices = t
        .graph()
        .vertices()
        .filter(|&v| t.graph().degree(v) >= 3)
        .count();
    if branch_vertices < 2 {
        return Err(Error::construction(
            NAME,
            format!("needs at least two vertices of degree >= 3 (got {branch_vertices})"),
        ));
    }
    if n < k + 1 {
        return Err(Error::construction(
            NAME,
            format!("needs n >= k + 1 = {} (got n={n})", k + 1),
        ));
    }
    let leg = p + 1;
    let clique = k - p - 1;
    let full = (n - 1) / k;
    let rem = (n - 1) % k;
    let mut g = Graph::empty(n)?;
    let mut next = 1usize;
    let mut build_block = |g: &mut Graph, leg_len: usize, clique_len: usize| -> Result<()> {
        let mut prev = 0usize;
        for _ in 0..leg_len {
            g.add_edge_mut(prev, next)?;
            prev = next;
            next += 1;
        }
        if clique_len > 0 {
            g.add_edge_mut(prev, next)?; // leg leaf to one clique vertex
            for u in next..next + clique_len {
                for v in u + 1..next + clique_len {
                    g.add_edge_mut(u, v)?;
                }
            }
            next += clique_len;
        }
        Ok(())
    };
    for _ in 0..full {
        build_block(&mut g, leg, clique)?;
    }
    if rem > 0 {
        build_block(&mut g, rem.min(leg), rem.saturating_sub(leg))?;
    }
    let claimed = full * (choose2(clique) + p + 2)
        + if rem == 0 {
            0
        } else if rem <= leg {
            rem
        } else {
            rem.min(leg) + 1 + choose2(rem - leg)
        };
    finish(
        NAME,
        g,
        n,
        claimed,
        pmap([
            ("k", k as i64),
            ("p", p as i64),
            ("full_blocks", full as i64),
            ("per_block", (choose2(clique) + p + 2) as i64),
        ]),
    )
}

/// Connected d-regular graph on n vertices (one vertex of degree d - 1 when
/// n * d is odd): circulant base plus an antipodal layer or a repair
/// matching. e = floor(n * d / 2).
pub fn nearly_regular(n: usize, d: usize) -> Result<ConstructionResult> {
    const NAME: &str = "nearly_regular";
    if d >= n {
        return Err(Error::construction(
            NAME,
            format!("needs d < n (got n={n}, d={d})"),
        ));
    }
    if d < 2 && n > d + 1 {
        return Err(Error::construction(
            NAME,
            format!("no connected {d}-regular graph on {n} vertices"),
        ));
    }
    let mut g = Graph::empty(n)?;
    for offset in 1..=d / 2 {
        for v in 0..n {
            g.add_edge_mut(v, (v + offset) % n)?;
        }
    }
    if d % 2 == 1 {
        // antipodal layer; for odd n this is a repair matching that leaves
        // exactly the last vertex at degree d - 1
        for v in 0..n / 2 {
            g.add_edge_mut(v, v + n / 2)?;
        }
    }
    finish(NAME, g, n, n * d / 2, pmap([("d", d as i64)]))
}

/// K_a joined to an independent set: matching number a (for a < n - a + 1),
/// e = C(a, 2) + a(n - a).
pub fn clique_join_empty(a: usize, n: usize) -> Result<ConstructionResult> {
    const NAME: &str = "clique_join_empty";
    if a == 0 || a >= n {
        return Err(Error::construction(
            NAME,
            format!("needs 1 <= a < n (got a={a}, n={n})"),
        ));
    }
    let g = Graph::complete(a)?.join(&Graph::empty(n - a)?)?;
    finish(
        NAME,
        g,
        n,
        choose2(a) + a * (n - a),
        pmap([("a", a as i64)]),
    )
}

/// Hub-and-blocks witness for trees with second-smallest degree above 2:
/// hub v adjacent to one gate per block, each gate adjacent to
/// delta2(T) - 2 vertices of its (k-2)-clique, so every neighbor of the hub
/// has degree delta2(T) - 1.
pub fn prop2_delta2(t: &Tree, n: usize) -> Result<ConstructionResult> {
    const NAME: &str = "delta2_blocks";
    let tp = params_of(t)?;
    if t.is_star() {
        return Err(Error::construction(NAME, "tree must not be a star"));
    }
    let delta2 = tp.delta2.expect("non-star tree has a vertex of degree > 1");
    if delta2 <= 2 {
        return Err(Error::construction(
            NAME,
            format!("needs delta2 > 2 (got {delta2})"),
        ));
    }
    let k = t.vertex_count();
    if n < k {
        return Err(Error::construction(
            NAME,
            format!("needs n >= k = {k} (got n={n})"),
        ));
    }
    let full = (n - 1) / (k - 1);
    let rem = (n - 1) % (k - 1);
    let mut g = Graph::empty(n)?;
    let mut next = 1usize;
    let mut claimed = 0usize;
    let mut build_block = |g: &mut Graph, clique_len: usize| -> Result<usize> {
        let gate = next;
        g.add_edge_mut(0, gate)?;
        next += 1;
        let attach = (delta2 - 2).min(clique_len);
        for u in next..next + clique_len {
            for v in u + 1..next + clique_len {
                g.add_edge_mut(u, v)?;
            }
        }
        for u in next..next + attach {
            g.add_edge_mut(gate, u)?;
        }
        next += clique_len;
        Ok(1 + attach + choose2(clique_len))
    };
    for _ in 0..full {
        claimed += build_block(&mut g, k - 2)?;
    }
    if rem > 0 {
        claimed += build_block(&mut g, rem - 1)?;
    }
    let statement = (full * (choose2(k - 2) + delta2 - 1)) as i64;
    finish(
        NAME,
        g,
        n,
        claimed,
        pmap([
            ("k", k as i64),
            ("delta2", delta2 as i64),
            ("full_blocks", full as i64),
            ("statement_value", statement),
        ]),
    )
}

/// K_{a,b}: free of anything whose bipartition needs more than a on the
/// small side, and of anything all of whose edges need weight above a.
pub fn complete_bipartite(a: usize, b: usize) -> Result<ConstructionResult> {
    const NAME: &str = "complete_bipartite";
    let g = Graph::complete_bipartite(a, b)?;
    finish(
        NAME,
        g,
        a + b,
        a * b,
        pmap([("a", a as i64), ("b", b as i64)]),
    )
}

/// Hub joined to cliques below the branch size m(T): K_1 + (r K_{m-1} ∪ K_s)
/// with r = floor((n-1)/(m-1)). e = n - 1 + r C(m-1, 2) + C(s, 2).
pub fn branch_construction(t: &Tree, n: usize) -> Result<ConstructionResult> {
    const NAME: &str = "branch";
    if t.is_path() {
        return Err(Error::construction(NAME, "tree must not be a path"));
    }
    let m = params_of(t)?.m;
    if m < 2 {
        return Err(Error::construction(
            NAME,
            format!("needs m(T) >= 2 (got {m})"),
        ));
    }
    if n < 2 {
        return Err(Error::construction(NAME, "needs n >= 2"));
    }
    let r = (n - 1) / (m - 1);
    let s = (n - 1) % (m - 1);
    let mut inner = Graph::k_copies(r.max(1), &Graph::complete(m - 1)?)?;
    if r == 0 {
        inner = Graph::complete(s)?;
    } else if s > 0 {
        inner = inner.disjoint_union(&Graph::complete(s)?)?;
    }
    let g = Graph::complete(1)?.join(&inner)?;
    let claimed = n - 1 + r * choose2(m - 1) + choose2(s);
    finish(
        NAME,
        g,
        n,
        claimed,
        pmap([("m", m as i64), ("blocks", r as i64), ("rest", s as i64)]),
    )
}

fn blocks_of(n: usize, block: usize) -> (usize, usize) {
    (n / block, n % block)
}

/// Ring of cliques joined by single edges at distinct gates. Remainder
/// handling: none -> pure ring; one extra vertex -> spliced into one linking
/// edge; two or more -> an extra small block with its own gates.
pub fn cycle_of_cliques(n: usize, block: usize) -> Result<ConstructionResult> {
    const NAME: &str = "cycle_of_cliques";
    if block < 2 {
        return Err(Error::construction(
            NAME,
            format!("needs block >= 2 (got {block})"),
        ));
    }
    if n < block {
        return Err(Error::construction(
            NAME,
            format!("needs n >= block (got n={n}, block={block})"),
        ));
    }
    let (s, r) = blocks_of(n, block);
    let mut sizes = vec![block; s];
    if r >= 2 {
        sizes.push(r);
    }
    let mut g = Graph::empty(n)?;
    let mut starts = Vec::with_capacity(sizes.len());
    let mut next = 0usize;
    for &size in &sizes {
        for u in next..next + size {
            for v in u + 1..next + size {
                g.add_edge_mut(u, v)?;
            }
        }
        starts.push(next);
        next += size;
    }
    let nblocks = sizes.len();
    let splice = if r == 1 { Some(next) } else { None };
    let mut claimed: usize = sizes.iter().map(|&b| choose2(b)).sum();
    if nblocks == 1 {
        if let Some(w) = splice {
            // lone block: attach the extra vertex to both gates
            g.add_edge_mut(starts[0], w)?;
            g.add_edge_mut(starts[0] + 1, w)?;
            claimed += 2;
        }
    } else {
        for i in 0..nblocks {
            let out_gate = starts[i]; // x_i: lowest-indexed vertex
            let in_gate = starts[(i + 1) % nblocks] + 1; // y_{i+1}: second-lowest
            if i == nblocks - 1 {
                if let Some(w) = splice {
                    g.add_edge_mut(out_gate, w)?;
                    g.add_edge_mut(w, in_gate)?;
                    claimed += 2;
                    continue;
                }
            }
            g.add_edge_mut(out_gate, in_gate)?;
            claimed += 1;
        }
    }
    finish(
        NAME,
        g,
        n,
        claimed,
        pmap([
            ("block", block as i64),
            ("blocks", nblocks as i64),
            ("remainder", r as i64),
        ]),
    )
}

/// Path of cliques joined by single edges at distinct gates; the remainder
/// becomes a (possibly single-vertex) end block.
pub fn path_of_cliques(n: usize, block: usize) -> Result<ConstructionResult> {
    const NAME: &str = "path_of_cliques";
    if block < 2 {
        return Err(Error::construction(
            NAME,
            format!("needs block >= 2 (got {block})"),
        ));
    }
    if n < block {
        return Err(Error::construction(
            NAME,
            format!("needs n >= block (got n={n}, block={block})"),
        ));
    }
    let (s, r) = blocks_of(n, block);
    let mut sizes = vec![block; s];
    if r >= 1 {
        sizes.push(r);
    }
    let mut g = Graph::empty(n)?;
    let mut starts = Vec::with_capacity(sizes.len());
    let mut next = 0usize;
    for &size in &sizes {
        for u in next..next + size {
            for v in u + 1..next + size {
                g.add_edge_mut(u, v)?;
            }
        }
        starts.push(next);
        next += size;
    }
    for i in 0..sizes.len() - 1 {
        // x_i (lowest) forward to y_{i+1} (second-lowest, or the only vertex)
        let in_gate = starts[i + 1] + usize::from(sizes[i + 1] >= 2);
        g.add_edge_mut(starts[i], in_gate)?;
    }
    let claimed: usize = sizes.iter().map(|&b| choose2(b)).sum::<usize>() + sizes.len() - 1;
    finish(
        NAME,
        g,
        n,
        claimed,
        pmap([
            ("block", block as i64),
            ("blocks", sizes.len() as i64),
            ("remainder", r as i64),
        ]),
    )
}

/// The named constructions from the small-tree tables.
pub fn named_small(name: &str, n: usize) -> Result<ConstructionResult> {
    let check_min = |min: usize, tag: &'static str| -> Result<()> {
        if n < min {
            Err(Error::construction(
                tag,
                format!("needs n >= {min} (got {n})"),
            ))
        } else {
            Ok(())
        }
    };
    match name {
        "cycle" => {
            check_min(3, "cycle")?;
            finish("cycle", Graph::cycle(n)?, n, n, pmap([]))
        }
        "star" => {
            check_min(2, "star")?;
            finish("star", Graph::star(n - 1)?, n, n - 1, pmap([]))
        }
        "k1_plus_k2_empty" => {
            check_min(3, "k1_plus_k2_empty")?;
            let inner = if n == 3 {
                Graph::complete(2)?
            } else {
                Graph::complete(2)?.disjoint_union(&Graph::empty(n - 3)?)?
            };
            let g = Graph::complete(1)?.join(&inner)?;
            finish("k1_plus_k2_empty", g, n, n, pmap([]))
        }
        "k2_join_empty" => {
            check_min(3, "k2_join_empty")?;
            let g = Graph::complete(2)?.join(&Graph::empty(n - 2)?)?;
            finish("k2_join_empty", g, n, 2 * n - 3, pmap([]))
        }
        "k1_plus_matching" => {
            check_min(2, "k1_plus_matching")?;
            let g = Graph::complete(1)?.join(&Graph::matching_graph(n - 1)?)?;
            finish("k1_plus_matching", g, n, n - 1 + (n - 1) / 2, pmap([]))
        }
        "k2_bipartite" => {
            check_min(3, "k2_bipartite")?;
            let g = Graph::complete_bipartite(2, n - 2)?;
            finish("k2_bipartite", g, n, 2 * (n - 2), pmap([]))
        }
        "split_plus_edge" => {
            check_min(6, "split_plus_edge")?;
            let inner = Graph::empty(n - 4)?.disjoint_union(&Graph::complete(2)?)?;
            let g = Graph::complete(2)?.join(&inner)?;
            finish("split_plus_edge", g, n, 2 * n - 2, pmap([]))
        }
        "two_universal_plus_edge" => {
            check_min(4, "two_universal_plus_edge")?;
            // vertices 0,1 universal; additionally the edge 2-3
            let mut g = Graph::empty(n)?;
            for v in 1..n {
                g.add_edge_mut(0, v)?;
            }
            for v in 2..n {
                g.add_edge_mut(1, v)?;
            }
            g.add_edge_mut(2, 3)?;
            finish("two_universal_plus_edge", g, n, 2 * n - 2, pmap([]))
        }
        other => Err(Error::UnknownConstruction(other.to_string())),
    }
}

/// All table names accepted by [`named_small`].
pub const NAMED_SMALL: &[&str] = &[
    "cycle",
    "star",
    "k1_plus_k2_empty",
    "k2_join_empty",
    "k1_plus_matching",
    "k2_bipartite",
    "split_plus_edge",
    "two_universal_plus_edge",
];
