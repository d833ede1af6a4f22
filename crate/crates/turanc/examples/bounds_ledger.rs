//! Evaluate every closed-form bound for one tree and compare against the
//! exhaustive oracle.
//!
//! ```bash
//! cargo run --release --example bounds_ledger -- "S(2,2,1)" 9
//! ```

use turanc::bounds::{evaluate_all_bounds, BoundKind};
use turanc::{exc_bruteforce, parse_tree, to_graph6, ExcOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let expr = args.next().unwrap_or_else(|| "S(2,2,1)".into());
    let n: usize = args.next().map(|s| s.parse().expect("n")).unwrap_or(9);

    let tree = parse_tree(&expr).expect("tree expression");
    let oracle = exc_bruteforce(&tree, n, ExcOptions::default())
        .expect("oracle")
        .max_edges;

    println!(
        "bounds for {} at n = {n} (oracle: {oracle})",
        tree.family_name()
    );
    for b in evaluate_all_bounds(&tree, n).expect("bounds") {
        match b.value {
            Some(v) => {
                let gap = match b.kind {
                    BoundKind::Lower => oracle as i64 - v as i64,
                    _ => v as i64 - oracle as i64,
                };
                println!(
                    "  {:<18} {:<6} {:<4} gap={:<3} {}",
                    b.name,
                    format!("{:?}", b.kind),
                    v,
                    gap,
                    b.witness
                        .as_ref()
                        .map(|w| to_graph6(&w.graph).unwrap())
                        .unwrap_or_default()
                );
            }
            None => println!(
                "  {:<18} {:<6} n/a  ({})",
                b.name,
                format!("{:?}", b.kind),
                b.reason.unwrap_or_default()
            ),
        }
    }
}
