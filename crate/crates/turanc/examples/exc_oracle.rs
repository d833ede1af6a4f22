//! Exhaustive oracle run for one (tree, n) pair: exact value, all extremal
//! graphs, and enumeration statistics.
//!
//! ```bash
//! cargo run --release --example exc_oracle -- "S(2,2,1)" 8
//! ```

use turanc::{exc_bruteforce, parse_tree, ExcOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let expr = args.next().unwrap_or_else(|| "S(2,2,1)".into());
    let n: usize = args
        .next()
        .map(|s| s.parse().expect("n must be a number"))
        .unwrap_or(8);

    let tree = parse_tree(&expr).expect("tree expression");
    let record = exc_bruteforce(&tree, n, ExcOptions::default()).expect("oracle run");

    println!("tree            {}", record.tree);
    println!("n               {}", record.n);
    println!("ex_c(n, T)      {}", record.max_edges);
    println!("graphs examined {}", record.graphs_examined);
    println!("elapsed         {:.2?}", record.elapsed);
    println!("extremal graphs ({}):", record.extremal.len());
    for g6 in &record.extremal {
        println!("  {g6}");
    }
}
