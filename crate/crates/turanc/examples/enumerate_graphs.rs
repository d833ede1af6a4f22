//! Stream the isomorph-free connected graphs on n vertices and tally them
//! by edge count.
//!
//! ```bash
//! cargo run --release --example enumerate_graphs -- 7
//! ```

use std::collections::BTreeMap;
use turanc::{enumerate_connected, to_graph6};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n"))
        .unwrap_or(6);

    let mut by_edges: BTreeMap<usize, usize> = BTreeMap::new();
    let mut total = 0usize;
    let mut first_per_count: BTreeMap<usize, String> = BTreeMap::new();
    for g in enumerate_connected(n).expect("n in 1..=10") {
        let e = g.edge_count();
        *by_edges.entry(e).or_default() += 1;
        total += 1;
        first_per_count
            .entry(e)
            .or_insert_with(|| to_graph6(&g).unwrap());
    }
    println!("connected graphs on {n} vertices: {total} isomorphism classes");
    for (e, count) in by_edges {
        println!("  {e:>2} edges: {count:>6}   e.g. {}", first_per_count[&e]);
    }
}
