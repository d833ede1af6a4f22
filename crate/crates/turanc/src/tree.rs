//! Trees and the tree-expression grammar.
//!
//! Grammar accepted by `TreeExpr::parse` (and thus the CLI):
//!
//! ```text
//! P<k>                 path on k vertices
//! S<k>                 star with k leaves (k+1 vertices)
//! S(<a1>,...,<aj>)     spider, j >= 3 legs with a_i edges each
//! D(<a>,<b>)           double star: adjacent centers with a and b leaves
//! B(<k>,<a>)           broom on k vertices: one (a-1)-edge leg, rest pendant
//! Dstar22              double star D(2,2) with one extra leaf on a leaf
//! SD22                 D(2,2) with its central edge subdivided
//! edges:<u>-<v>,...    explicit edge list (must form a tree)
//! ```

use crate::canon;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt;

/// A graph certified connected and acyclic (e = n - 1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    graph: Graph,
}

impl Tree {
    pub fn new(graph: Graph) -> Result<Tree> {
        if !graph.is_connected() {
            return Err(Error::NotATree("not connected".into()));
        }
        if graph.edge_count() != graph.vertex_count() - 1 {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices",
                graph.edge_count(),
                graph.vertex_count()
            )));
        }
        Ok(Tree { graph })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// True iff the maximum degree is at most 2.
    pub fn is_path(&self) -> bool {
        self.graph.max_degree() <= 2
    }

    /// True iff at most one vertex has degree greater than 1.
    pub fn is_star(&self) -> bool {
        self.graph
            .vertices()
            .filter(|&v| self.graph.degree(v) > 1)
            .count()
            <= 1
    }

    /// Leg lengths (in edges, descending) when the tree is a spider: exactly
    /// one vertex of degree >= 3 and every other vertex on a path hanging off
    /// it. Stars count (all legs 1); paths do not.
    pub fn spider_legs(&self) -> Option<Vec<usize>> {
        let g = &self.graph;
        let centers: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
        if centers.len() != 1 {
            return None;
        }
        let center = centers[0];
        let mut legs = Vec::new();
        for first in g.neighbors(center).iter() {
            let mut len = 1;
            let mut prev = center;
            let mut cur = first;
            while g.degree(cur) == 2 {
                let next = g.neighbors(cur).iter().find(|&w| w != prev).unwrap();
                prev = cur;
                cur = next;
                len += 1;
            }
            if g.degree(cur) != 1 {
                return None; // ran into another branch vertex
            }
            legs.push(len);
        }
        legs.sort_unstable_by(|a, b| b.cmp(a));
        Some(legs)
    }

    /// `(a, b)` with `a <= b` when the tree is a double star: two adjacent
    /// centers with a and b pendant leaves and nothing else.
    pub fn double_star_arms(&self) -> Option<(usize, usize)> {
        let g = &self.graph;
        let internal: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 1).collect();
        if internal.len() != 2 || !g.has_edge(internal[0], internal[1]) {
            return None;
        }
        let a = g.degree(internal[0]) - 1;
        let b = g.degree(internal[1]) - 1;
        Some((a.min(b), a.max(b)))
    }

    /// Shortest family name that matches this tree, else the `edges:` form
    /// on the canonical labeling.
    pub fn family_name(&self) -> String {
        let n = self.vertex_count();
        let mut candidates: Vec<String> = Vec::new();
        if self.is_path() {
            candidates.push(format!("P{n}"));
        }
        if self.is_star() && n >= 2 {
            candidates.push(format!("S{}", n - 1));
        }
        if let Some(legs) = self.spider_legs() {
            let ones = legs.iter().filter(|&&l| l == 1).count();
            if legs[0] >= 2 && ones == legs.len() - 1 {
                candidates.push(format!("B({},{})", n, legs[0] + 1));
            }
            let list: Vec<String> = legs.iter().map(|l| l.to_string()).collect();
            candidates.push(format!("S({})", list.join(",")));
        }
        if let Some((a, b)) = self.double_star_arms() {
            candidates.push(format!("D({a},{b})"));
        }
        for special in [TreeExpr::DStar22, TreeExpr::SD22] {
            let t = special.build().unwrap();
            if n == t.vertex_count()
                && canon::canonical_form(&self.graph) == canon::canonical_form(t.graph())
            {
                candidates.push(special.to_string());
            }
        }
        candidates
            .into_iter()
            .enumerate()
            .min_by_key(|(i, s)| (s.len(), *i))
            .map(|(_, s)| s)
            .unwrap_or_else(|| {
                let c = canon::canonical_graph(&self.graph);
                let list: Vec<String> = c.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                format!("edges:{}", list.join(","))
            })
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({})", self.family_name())
    }
}

/// Abstract syntax of the tree-expression grammar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeExpr {
    Path(usize),
    Star(usize),
    Spider(Vec<usize>),
    DoubleStar(usize, usize),
    Broom { k: usize, a: usize },
    DStar22,
    SD22,
    Edges(Vec<(usize, usize)>),
}

impl fmt::Display for TreeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeExpr::Path(k) => write!(f, "P{k}"),
            TreeExpr::Star(k) => write!(f, "S{k}"),
            TreeExpr::Spider(legs) => {
                let list: Vec<String> = legs.iter().map(|l| l.to_string()).collect();
                write!(f, "S({})", list.join(","))
            }
            TreeExpr::DoubleStar(a, b) => write!(f, "D({a},{b})"),
            TreeExpr::Broom { k, a } => write!(f, "B({k},{a})"),
            TreeExpr::DStar22 => write!(f, "Dstar22"),
            TreeExpr::SD22 => write!(f, "SD22"),
            TreeExpr::Edges(edges) => {
                let list: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(f, "edges:{}", list.join(","))
            }
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", b as char))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<usize>()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "number too large".into(),
            })
    }

    fn number_list(&mut self) -> Result<Vec<usize>> {
        self.expect(b'(')?;
        let mut out = vec![self.number()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            out.push(self.number()?);
        }
        self.expect(b')')?;
        Ok(out)
    }

    fn edge_list(&mut self) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        loop {
            let u = self.number()?;
            self.expect(b'-')?;
            let v = self.number()?;
            out.push((u, v));
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<TreeExpr> {
        if self.bytes.starts_with(b"Dstar22") {
            self.pos = 7;
            return Ok(TreeExpr::DStar22);
        }
        if self.bytes.starts_with(b"SD22") {
            self.pos = 4;
            return Ok(TreeExpr::SD22);
        }
        if self.bytes.starts_with(b"edges:") {
            self.pos = 6;
            return Ok(TreeExpr::Edges(self.edge_list()?));
        }
        match self.peek() {
            Some(b'P') => {
                self.pos += 1;
                Ok(TreeExpr::Path(self.number()?))
            }
            Some(b'S') => {
                self.pos += 1;
                if self.peek() == Some(b'(') {
                    let legs = self.number_list()?;
                    if legs.len() < 3 {
                        return self.err("spider needs at least 3 legs");
                    }
                    if legs.contains(&0) {
                        return self.err("spider legs need at least 1 edge");
                    }
                    Ok(TreeExpr::Spider(legs))
                } else {
                    Ok(TreeExpr::Star(self.number()?))
                }
            }
            Some(b'D') => {
                self.pos += 1;
                let args = self.number_list()?;
                if args.len() != 2 {
                    return self.err("double star takes exactly two arguments");
                }
                if args[0] == 0 || args[1] == 0 {
                    return self.err("double star arms must be at least 1");
                }
                Ok(TreeExpr::DoubleStar(args[0], args[1]))
            }
            Some(b'B') => {
                self.pos += 1;
                let args = self.number_list()?;
                if args.len() != 2 {
                    return self.err("broom takes exactly two arguments");
                }
                let (k, a) = (args[0], args[1]);
                if a < 2 || a + 2 > k {
                    return self.err(format!("broom needs 2 <= a <= k-2 (got k={k}, a={a})"));
                }
                Ok(TreeExpr::Broom { k, a })
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("empty expression"),
        }
    }
}

impl TreeExpr {
    pub fn parse(s: &str) -> Result<TreeExpr> {
        let mut p = Parser {
            bytes: s.as_bytes(),
            pos: 0,
        };
        let expr = p.expr()?;
        if p.pos != p.bytes.len() {
            return p.err("trailing input");
        }
        Ok(expr)
    }

    /// Builds the tree with the vertex layout each notation implies
    /// (spider center first, then legs in order; double-star centers 0 and 1).
    pub fn build(&self) -> Result<Tree> {
        let graph = match self {
            TreeExpr::Path(k) => {
                if *k == 0 {
                    return Err(Error::invalid("path needs at least 1 vertex"));
                }
                Graph::path(*k)?
            }
            TreeExpr::Star(k) => {
                if *k == 0 {
                    return Err(Error::invalid("star needs at least 1 leaf"));
                }
                Graph::star(*k)?
            }
            TreeExpr::Spider(legs) => spider_graph(legs)?,
            TreeExpr::DoubleStar(a, b) => {
                let mut g = Graph::empty(a + b + 2)?;
                g.add_edge_mut(0, 1)?;
                for leaf in 2..2 + a {
                    g.add_edge_mut(0, leaf)?;
                }
                for leaf in 2 + a..2 + a + b {
                    g.add_edge_mut(1, leaf)?;
                }
                g
            }
            TreeExpr::Broom { k, a } => {
                let mut legs = vec![a - 1];
                legs.extend(std::iter::repeat_n(1, k - a));
                spider_graph(&legs)?
            }
            TreeExpr::DStar22 => {
                // D(2,2) centers 0,1 with leaves 2,3 and 4,5; leaf 6 on vertex 4
                Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (4, 6)])?
            }
            TreeExpr::SD22 => {
                // centers 0,1 joined through subdivision vertex 2
                Graph::from_edges(7, &[(0, 2), (2, 1), (0, 3), (0, 4), (1, 5), (1, 6)])?
            }
            TreeExpr::Edges(edges) => {
                if edges.is_empty() {
                    return Err(Error::NotATree("empty edge list".into()));
                }
                let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap() + 1;
                if n > 64 {
                    return Err(Error::VertexCount(n));
                }
                let mut g = Graph::empty(n)?;
                for &(u, v) in edges {
                    if g.has_edge(u, v) {
                        return Err(Error::NotATree(format!("duplicate edge {u}-{v}")));
                    }
                    g.add_edge_mut(u, v)?;
                }
                g
            }
        };
        Tree::new(graph)
    }
}

fn spider_graph(legs: &[usize]) -> Result<Graph> {
    let n = 1 + legs.iter().sum::<usize>();
    if n > 64 {
        return Err(Error::VertexCount(n));
    }
    let mut g = Graph::empty(n)?;
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge_mut(prev, next)?;
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

/// Parses an expression and builds the tree.
pub fn parse_tree(s: &str) -> Result<Tree> {
    TreeExpr::parse(s)?.build()
}
