//! Isomorph-free generation of graphs by canonical augmentation, and the
//! exhaustive connected Turán oracle built on it.
//!
//! Generation extends each canonical representative on k vertices by one new
//! vertex with every neighbor subset. A child is kept iff deleting the new
//! vertex is equivalent to deleting the child's canonical-last vertex
//! (i.e. the two deletions give the same canonical form); children of one
//! parent are deduplicated locally. Every isomorphism class on k+1 vertices
//! then appears exactly once across all parents, with flat memory and no
//! global dedup. Connectivity is only enforced at emission, since the
//! canonical deletion vertex of a connected graph may be a cut vertex.

use crate::canon::{self, CanonicalForm};
use crate::embed;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::tree::{Tree, TreeExpr};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

pub const MAX_ENUM_VERTICES: usize = 10;
/// Largest n whose connected-graph list is materialized and cached in-process.
const MAX_CACHED: usize = 9;

/// Accepted one-vertex extensions of a canonical parent, as canonical
/// representatives, deduplicated, in deterministic order.
///
/// The acceptance test compares deleting the new vertex against deleting the
/// child's canonical-last vertex; the former is the parent itself, so only
/// the latter needs a canonical form.
fn children_of(parent: &Graph) -> Vec<Graph> {
    let k = parent.vertex_count();
    debug_assert_eq!(
        canon::encode_labeled(parent),
        canon::canonical_form(parent),
        "parents must be canonically labeled"
    );
    let parent_form = canon::encode_labeled(parent);
    let mut seen: std::collections::HashSet<CanonicalForm> = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << k) {
        let child = parent
            .add_vertex_with(VertexSet::from_bits(mask))
            .expect("within capacity");
        let (perm, form) = canon::canonical_labeling(&child);
        if !seen.insert(form) {
            continue;
        }
        let new_vertex = k;
        let canonical_last = perm[k];
        let accepted = if new_vertex == canonical_last {
            true
        } else if child.degree(new_vertex) != child.degree(canonical_last) {
            false
        } else {
            canon::canonical_form(&child.delete_vertex(canonical_last).unwrap()) == parent_form
        };
        if accepted {
            out.push(child.reordered(&perm));
        }
    }
    out
}

struct Caches {
    /// all-graph representatives per level (kept through level 8)
    frontier: HashMap<usize, Arc<Vec<Graph>>>,
    /// sorted connected lists per n (kept through MAX_CACHED)
    connected: HashMap<usize, Arc<Vec<Graph>>>,
}

/// One lock guards both caches *and* serializes building, so concurrent
/// first callers (e.g. parallel test threads) never duplicate the expensive
/// n = 9 expansion.
fn caches() -> &'static Mutex<Caches> {
    static CACHES: OnceLock<Mutex<Caches>> = OnceLock::new();
    CACHES.get_or_init(|| {
        Mutex::new(Caches {
            frontier: HashMap::new(),
            connected: HashMap::new(),
        })
    })
}

/// Canonical representatives of all graphs (connected or not) on `k`
/// vertices. Caller holds the cache lock; levels build iteratively.
fn frontier_locked(caches: &mut Caches, k: usize) -> Arc<Vec<Graph>> {
    if let Some(hit) = caches.frontier.get(&k) {
        return hit.clone();
    }
    let mut level: Arc<Vec<Graph>> = Arc::new(vec![Graph::empty(1).unwrap()]);
    let mut have = 1usize;
    for j in (1..k).rev() {
        if let Some(hit) = caches.frontier.get(&j) {
            level = hit.clone();
            have = j;
            break;
        }
    }
    for j in have + 1..=k {
        let next: Vec<Graph> = level
            .par_iter()
            .map(children_of)
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
        level = Arc::new(next);
        if j <= 8 {
            caches.frontier.insert(j, level.clone());
        }
    }
    level
}

fn frontier(k: usize) -> Arc<Vec<Graph>> {
    let mut guard = caches().lock().unwrap();
    frontier_locked(&mut guard, k)
}

/// All connected graphs on `n` vertices, one canonical representative per
/// isomorphism class, sorted by (edge count, canonical form). Cached per
/// process for `n <= 9`.
pub fn connected_graphs(n: usize) -> Result<Arc<Vec<Graph>>> {
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(Error::EnumerationRange(n));
    }
    let mut guard = caches().lock().unwrap();
    if let Some(hit) = guard.connected.get(&n) {
        return Ok(hit.clone());
    }
    let mut list: Vec<(usize, CanonicalForm, Graph)> = if n == 1 {
        vec![(
            0,
            canon::canonical_form(&Graph::empty(1).unwrap()),
            Graph::empty(1).unwrap(),
        )]
    } else {
        frontier_locked(&mut guard, n - 1)
            .par_iter()
            .map(|parent| {
                children_of(parent)
                    .into_iter()
                    .filter(|g| g.is_connected())
                    .map(|g| (g.edge_count(), canon::encode_labeled(&g), g))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    list.sort_unstable_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let graphs = Arc::new(list.into_iter().map(|(_, _, g)| g).collect::<Vec<_>>());
    if n <= MAX_CACHED {
        guard.connected.insert(n, graphs.clone());
    }
    Ok(graphs)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in a deterministic order (sorted by edge count then canonical
/// form for `n <= 9`; augmentation order at `n = 10`).
pub fn enumerate_connected(n: usize) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(Error::EnumerationRange(n));
    }
    if n <= MAX_CACHED {
        let list = connected_graphs(n)?;
        let len = list.len();
        return Ok(Box::new((0..len).map(move |i| list[i].clone())));
    }
    // n = 10: stream children of the level-9 frontier without materializing
    let parents = frontier(n - 1);
    let count = parents.len();
    Ok(Box::new((0..count).flat_map(move |i| {
        children_of(&parents[i])
            .into_iter()
            .filter(|g| g.is_connected())
    })))
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canon::canonical_form(g)
}

/// Result of the exhaustive oracle: the exact connected Turán number for
/// `(tree, n)` with every extremal graph up to isomorphism.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExcRecord {
    pub n: usize,
    pub tree: String,
    pub max_edges: usize,
    /// graph6 of the canonically labeled extremal graphs, sorted.
    pub extremal: Vec<String>,
    /// Number of containment tests performed (the scan stops once the edge
    /// count drops below the established maximum).
    pub graphs_examined: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ExcOptions {
    /// 0 = library default. Worker count never changes results.
    pub workers: usize,
}

fn in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
            .install(f)
    }
}

/// Exact `ex_c(n, T)` by exhaustive isomorph-free enumeration.
///
/// Requires a pattern on at least 4 vertices (there are no nontrivial
/// P_3-free connected hosts) and `n <= 10`.
pub fn exc_bruteforce(tree: &Tree, n: usize, opts: ExcOptions) -> Result<ExcRecord> {
    if tree.vertex_count() < 4 {
        return Err(Error::invalid(format!(
            "oracle needs a pattern on at least 4 vertices (got {})",
            tree.vertex_count()
        )));
    }
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(Error::EnumerationRange(n));
    }
    let start = Instant::now();
    let (max_edges, extremal, examined) = if n <= MAX_CACHED {
        exc_over_sorted(tree, &connected_graphs(n)?)
    } else {
        in_pool(opts.workers, || exc_streaming(tree, n))
    };
    let mut extremal: Vec<String> = extremal
        .iter()
        .map(|g| crate::graph6::to_graph6(g).expect("n <= 10"))
        .collect();
    extremal.sort_unstable();
    Ok(ExcRecord {
        n,
        tree: tree.family_name(),
        max_edges,
        extremal,
        graphs_examined: examined,
        elapsed: start.elapsed(),
    })
}

/// Scan the (edge-count sorted) list from the dense end; the first T-free
/// graph fixes the maximum and the scan stops when the edge count drops.
fn exc_over_sorted(tree: &Tree, list: &[Graph]) -> (usize, Vec<Graph>, usize) {
    let matcher = embed::Matcher::new(tree);
    let mut max_edges = None;
    let mut extremal = Vec::new();
    let mut examined = 0usize;
    for g in list.iter().rev() {
        if let Some(m) = max_edges {
            if g.edge_count() < m {
                break;
            }
        }
        examined += 1;
        if !matcher.contains(g) {
            max_edges = Some(g.edge_count());
            extremal.push(g.clone());
        }
    }
    (max_edges.unwrap_or(0), extremal, examined)
}

fn exc_streaming(tree: &Tree, n: usize) -> (usize, Vec<Graph>, usize) {
    #[derive(Default)]
    struct Acc {
        max_edges: usize,
        extremal: Vec<Graph>,
        examined: usize,
    }
    let parents = frontier(n - 1);
    let matcher = embed::Matcher::new(tree);
    let total = parents.len();
    let done = std::sync::atomic::AtomicUsize::new(0);
    let merged = parents
        .par_iter()
        .fold(Acc::default, |mut acc, parent| {
            let d = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
            if d.is_multiple_of(25_000) {
                eprintln!("exc n={n}: {d}/{total} parent graphs expanded");
            }
            for g in children_of(parent) {
                if !g.is_connected() {
                    continue;
                }
                let e = g.edge_count();
                if e < acc.max_edges && acc.max_edges > 0 {
                    continue;
                }
                acc.examined += 1;
                if !matcher.contains(&g) {
                    if e > acc.max_edges {
                        acc.max_edges = e;
                        acc.extremal.clear();
                    }
                    if e == acc.max_edges {
                        acc.extremal.push(g);
                    }
                }
            }
            acc
        })
        .reduce(Acc::default, |mut a, b| {
            if b.max_edges > a.max_edges {
                a.max_edges = b.max_edges;
                a.extremal = b.extremal;
            } else if b.max_edges == a.max_edges {
                a.extremal.extend(b.extremal);
            }
            a.examined += b.examined;
            a
        });
    let mut extremal = merged.extremal;
    extremal.retain(|g| g.edge_count() == merged.max_edges);
    (merged.max_edges, extremal, merged.examined)
}

/// One row of a monotonicity scan.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanPoint {
    pub n: usize,
    pub max_edges: usize,
    /// True iff some smaller n had a strictly larger value.
    pub violates: bool,
}

/// `ex_c(n, T)` for `n` from `|T| - 1` to `n_max`, flagging monotonicity
/// violations.
pub fn monotonicity_scan(tree: &Tree, n_max: usize, opts: ExcOptions) -> Result<Vec<ScanPoint>> {
    let start = tree.vertex_count().saturating_sub(1).max(1);
    if n_max > MAX_ENUM_VERTICES {
        return Err(Error::EnumerationRange(n_max));
    }
    if n_max < start {
        return Err(Error::invalid(format!(
            "scan range empty: n_max {} below |T| - 1 = {}",
            n_max, start
        )));
    }
    let mut out: Vec<ScanPoint> = Vec::new();
    let mut best_so_far = 0usize;
    for n in start..=n_max {
        let max_edges = if n < tree.vertex_count() {
            // every connected graph on fewer vertices than T is T-free
            n * (n - 1) / 2
        } else {
            exc_bruteforce(tree, n, opts)?.max_edges
        };
        out.push(ScanPoint {
            n,
            max_edges,
            violates: best_so_far > max_edges,
        });
        best_so_far = best_so_far.max(max_edges);
    }
    Ok(out)
}

/// Content-addressed on-disk memoization of oracle records, keyed by the
/// canonical form of the tree and n.
pub fn exc_cached(
    tree: &Tree,
    n: usize,
    opts: ExcOptions,
    cache_dir: Option<&std::path::Path>,
) -> Result<ExcRecord> {
    let Some(dir) = cache_dir else {
        return exc_bruteforce(tree, n, opts);
    };
    let key = format!(
        "exc_{}_{}.json",
        canon::canonical_form(tree.graph()).to_hex(),
        n
    );
    let path = dir.join(key);
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(record) = serde_json::from_str::<ExcRecord>(&text) {
            return Ok(record);
        }
    }
    let record = exc_bruteforce(tree, n, opts)?;
    std::fs::create_dir_all(dir)?;
    std::fs::write(&path, serde_json::to_string_pretty(&record)?)?;
    Ok(record)
}

/// Parses the stored tree field of an `ExcRecord` back into a tree.
pub fn record_tree(record: &ExcRecord) -> Result<Tree> {
    TreeExpr::parse(&record.tree)?.build()
}
