//! Parse tree expressions and print the ten structural parameters that
//! drive the lower-bound constructions.
//!
//! ```bash
//! cargo run --example tree_parameters
//! cargo run --example tree_parameters -- "S(4,2,1)" "edges:0-1,1-2,2-3,1-4"
//! ```

use turanc::{parse_tree, tree_params};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let exprs: Vec<String> = if args.is_empty() {
        [
            "P6", "S5", "S(2,2,1)", "S(3,1,1)", "D(2,2)", "B(7,3)", "Dstar22", "SD22",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect()
    } else {
        args
    };

    println!(
        "{:<12} {:>2} {:>3} {:>2} {:>4} {:>4} {:>3} {:>7} {:>2} {:>3} {:>7} {:>2}",
        "tree", "n", "ell", "p", "Δmax", "Δmin", "nu", "delta2", "m", "m2", "bipart", "w"
    );
    for expr in exprs {
        let tree = match parse_tree(&expr) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("{expr}: {e}");
                continue;
            }
        };
        let p = tree_params(&tree).expect("trees here have >= 2 vertices");
        println!(
            "{:<12} {:>2} {:>3} {:>2} {:>4} {:>4} {:>3} {:>7} {:>2} {:>3} {:>7} {:>2}",
            tree.family_name(),
            tree.vertex_count(),
            p.ell,
            p.p,
            p.max_deg,
            p.min_deg,
            p.nu,
            p.delta2.map_or("absent".into(), |d| d.to_string()),
            p.m,
            p.m2,
            format!("({},{})", p.bipartition.0, p.bipartition.1),
            p.w
        );
    }
}
