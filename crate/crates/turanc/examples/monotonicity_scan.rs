//! Reproduce the failure of monotonicity in n: for several seven-vertex
//! trees, the complete graph on |T| - 1 vertices beats every T-free
//! connected graph on |T| vertices.
//!
//! ```bash
//! cargo run --release --example monotonicity_scan
//! ```

use turanc::{monotonicity_scan, parse_tree, ExcOptions};

fn main() {
    for expr in ["S(3,2,1)", "Dstar22", "S(2,2,2)", "P4"] {
        let tree = parse_tree(expr).unwrap();
        println!("{} (|T| = {}):", tree.family_name(), tree.vertex_count());
        let points = monotonicity_scan(&tree, 9, ExcOptions::default()).unwrap();
        for p in points {
            println!(
                "  n={:<2} ex_c={:<3}{}",
                p.n,
                p.max_edges,
                if p.violates {
                    "  <- smaller than an earlier value"
                } else {
                    ""
                }
            );
        }
    }
}
