//! Exact tree-containment decisions: does a host graph contain a subgraph
//! isomorphic to a given tree?
//!
//! Plain backtracking is enough at this scale (patterns <= ~10 vertices,
//! hosts <= 64). The pattern is rooted at a maximum-degree vertex and laid
//! out in BFS order with children sorted by decreasing subtree size, so
//! failures happen early; candidates are pruned by host degree and by the
//! free capacity needed for unplaced children.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::Tree;

/// Injective vertex map witnessing containment: `map[i]` is the host vertex
/// for pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

/// Reusable matcher for one pattern tree: the rooted layout is computed once
/// and can then test many hosts (the oracle tests hundreds of thousands).
pub struct Matcher {
    tree: Tree,
    plan: Plan,
}

impl Matcher {
    pub fn new(tree: &Tree) -> Matcher {
        Matcher {
            tree: tree.clone(),
            plan: plan(tree),
        }
    }

    pub fn contains(&self, host: &Graph) -> bool {
        self.find(host).is_some()
    }

    fn find(&self, host: &Graph) -> Option<Vec<usize>> {
        let tn = self.tree.vertex_count();
        if tn > host.vertex_count() {
            return None;
        }
        if tn == 1 {
            return Some(vec![0]);
        }
        let mut assigned = Vec::with_capacity(tn);
        if search(host, &self.plan, &mut assigned, 0) {
            let mut map = vec![0usize; tn];
            for (i, &hv) in assigned.iter().enumerate() {
                map[self.plan.order[i]] = hv;
            }
            Some(map)
        } else {
            None
        }
    }
}

struct Plan {
    /// Pattern vertices in assignment order, root first.
    order: Vec<usize>,
    /// For order position i > 0: the order position of the parent.
    parent_pos: Vec<usize>,
    /// Degree in the pattern, indexed by pattern vertex.
    deg: Vec<usize>,
    /// Number of children in the rooted pattern, indexed by pattern vertex.
    children: Vec<usize>,
}

fn plan(t: &Tree) -> Plan {
    let g = t.graph();
    let n = g.vertex_count();
    let deg = g.degrees();
    let root = (0..n).max_by_key(|&v| (deg[v], usize::MAX - v)).unwrap();

    // rooted subtree sizes
    let mut size = vec![1usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut bfs = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut head = 0;
    while head < bfs.len() {
        let v = bfs[head];
        head += 1;
        for u in g.neighbors(v).iter() {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                bfs.push(u);
            }
        }
    }
    for &v in bfs.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }

    // BFS order, children sorted by decreasing subtree size
    let mut order = vec![root];
    let mut pos_of = vec![usize::MAX; n];
    pos_of[root] = 0;
    let mut parent_pos = vec![usize::MAX; n];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let mut kids: Vec<usize> = g.neighbors(v).iter().filter(|&u| parent[u] == v).collect();
        kids.sort_unstable_by(|&a, &b| size[b].cmp(&size[a]).then(a.cmp(&b)));
        for u in kids {
            pos_of[u] = order.len();
            parent_pos[order.len()] = pos_of[v];
            order.push(u);
        }
    }

    let children = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&u| parent[u] == v).count())
        .collect();

    Plan {
        order,
        parent_pos,
        deg,
        children,
    }
}

fn search(host: &Graph, plan: &Plan, assigned: &mut Vec<usize>, used: u64) -> bool {
    let i = assigned.len();
    if i == plan.order.len() {
        return true;
    }
    let pv = plan.order[i];
    let need_deg = plan.deg[pv];
    let need_children = plan.children[pv];

    let candidates: u64 = if i == 0 {
        crate::graph::VertexSet::full(host.vertex_count()).bits()
    } else {
        host.neighbor_bits(assigned[plan.parent_pos[i]])
    };
    let mut cand = candidates & !used;
    while cand != 0 {
        let hv = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if host.degree(hv) < need_deg {
            continue;
        }
        let used2 = used | (1u64 << hv);
        // enough free neighbors left for this vertex's unplaced children
        if ((host.neighbor_bits(hv) & !used2).count_ones() as usize) < need_children {
            continue;
        }
        assigned.push(hv);
        if search(host, plan, assigned, used2) {
            return true;
        }
        assigned.pop();
    }
    false
}

/// True iff `host` contains a subgraph isomorphic to `t`.
pub fn contains_tree(host: &Graph, t: &Tree) -> bool {
    Matcher::new(t).contains(host)
}

/// An embedding when one exists; the returned map is verified before it is
/// handed out.
pub fn find_embedding(host: &Graph, t: &Tree) -> Option<Embedding> {
    let map = Matcher::new(t).find(host)?;
    assert!(
        verify_embedding(host, t, &map),
        "internal error: embedding failed verification"
    );
    Some(Embedding { map })
}

fn verify_embedding(host: &Graph, t: &Tree, map: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::new();
    map.iter().all(|&h| seen.insert(h))
        && t.graph()
            .edges()
            .iter()
            .all(|&(u, v)| host.has_edge(map[u], map[v]))
}

/// True iff `host` is `t`-saturated: `t`-free, but adding any missing edge
/// creates a copy of `t`.
///
/// Errors if the host already contains the pattern.
pub fn is_saturated(host: &Graph, t: &Tree) -> Result<bool> {
    let matcher = Matcher::new(t);
    if matcher.contains(host) {
        return Err(Error::HostContainsPattern);
    }
    let n = host.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if host.has_edge(u, v) {
                continue;
            }
            let g = host.with_edge(u, v)?;
            if !matcher.contains(&g) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::tree::parse_tree;

    #[test]
    fn degree_blocked_patterns() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(!contains_tree(&c6, &parse_tree("S(2,1,1)").unwrap()));
        assert!(contains_tree(&c6, &parse_tree("P6").unwrap()));
    }

    #[test]
    fn weight_blocked_double_star() {
        let host = Graph::complete_bipartite(2, 6).unwrap();
        assert!(!contains_tree(&host, &parse_tree("D(2,2)").unwrap()));
        assert!(contains_tree(&host, &parse_tree("P5").unwrap()));
    }

    #[test]
    fn hamiltonian_path_of_k4() {
        assert!(contains_tree(
            &Graph::complete(4).unwrap(),
            &parse_tree("P4").unwrap()
        ));
    }

    #[test]
    fn matching_blocked_spider() {
        let host = Graph::complete(2)
            .unwrap()
            .join(&Graph::empty(4).unwrap())
            .unwrap();
        assert_eq!(
            find_embedding(&host, &parse_tree("S(2,2,1)").unwrap()),
            None
        );
    }

    #[test]
    fn identity_like_embeddings() {
        let p7 = parse_tree("P7").unwrap();
        let emb = find_embedding(p7.graph(), &p7).unwrap();
        assert_eq!(emb.map.len(), 7);

        let host = Graph::star(8).unwrap();
        let emb = find_embedding(&host, &parse_tree("S5").unwrap()).unwrap();
        assert_eq!(emb.map.len(), 6);
    }

    #[test]
    fn single_vertex_pattern() {
        let t = parse_tree("P1").unwrap();
        assert!(contains_tree(&Graph::empty(1).unwrap(), &t));
        assert!(contains_tree(&Graph::cycle(5).unwrap(), &t));
    }

    #[test]
    fn saturation_examples() {
        // K_2 + E_5 is S(2,2,1)-saturated
        let host = Graph::complete(2)
            .unwrap()
            .join(&Graph::empty(5).unwrap())
            .unwrap();
        assert_eq!(
            is_saturated(&host, &parse_tree("S(2,2,1)").unwrap()),
            Ok(true)
        );

        // C_7 is S(2,2,2)-free but some chord keeps it free
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(
            is_saturated(&c7, &parse_tree("S(2,2,2)").unwrap()),
            Ok(false)
        );

        // precondition: host already contains the pattern
        let k6 = Graph::complete(6).unwrap();
        assert!(matches!(
            is_saturated(&k6, &parse_tree("P4").unwrap()),
            Err(Error::HostContainsPattern)
        ));
    }

    #[test]
    fn host_monotone_under_edge_addition() {
        let t = parse_tree("S(2,1,1)").unwrap();
        let mut g = Graph::cycle(6).unwrap();
        assert!(!contains_tree(&g, &t));
        g = g.with_edge(0, 3).unwrap();
        assert!(contains_tree(&g, &t));
        // adding more edges can never lose the pattern
        for u in 0..6 {
            for v in u + 1..6 {
                let bigger = g.with_edge(u, v).unwrap();
                assert!(contains_tree(&bigger, &t));
            }
        }
    }
}
