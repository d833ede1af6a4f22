//! Check every bundled table row against the exhaustive oracle.
//!
//! ```bash
//! cargo run --release --example verify_tables -- 8
//! ```
//!
//! At n_max >= 7 this run reports exactly one FAIL: the bundled table claims
//! ex_c(7, S(3,2,1)) = 11, but the true value is 12 (K_5 plus two pendant
//! edges on one vertex is S(3,2,1)-free). All other rows verify.

use turanc::tables::verify_tables;
use turanc::ExcOptions;

fn main() {
    let n_max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n_max"))
        .unwrap_or(7);

    let checks = verify_tables(n_max, ExcOptions::default()).expect("verification run");
    let mut failures = 0;
    for c in &checks {
        if !c.pass {
            failures += 1;
        }
        let tightness = match c.tight {
            Some(true) => " (tight)",
            Some(false) => " (strict)",
            None => "",
        };
        println!(
            "{} table{} {:<14} n={} expected={:<4} oracle={}{}",
            if c.pass { "PASS" } else { "FAIL" },
            c.table,
            c.tree,
            c.n,
            c.expected.map_or("-".into(), |v| v.to_string()),
            c.oracle,
            tightness
        );
    }
    println!("{} checks, {failures} failures", checks.len());
}
