//! Finite-n gamma ratios: ex_c(n, T) normalized by (|T| - 2) n / 2.
//! These are data points, not limits; no asymptotic claim is made.
//!
//! ```bash
//! cargo run --release --example gamma_trend
//! ```

use turanc::bounds::gamma_report;
use turanc::{parse_tree, ExcOptions};

fn main() {
    // small trees over the oracle range
    for expr in ["P6", "S5", "S(2,2,1)", "D(2,2)"] {
        let tree = parse_tree(expr).unwrap();
        let k = tree.vertex_count();
        println!("{} (|T| = {k}):", tree.family_name());
        let rows = gamma_report(&tree, k..=9, ExcOptions::default()).unwrap();
        for r in rows {
            println!(
                "  n={:<2} ex_c={:<3} ratio = {}/{} = {:.4}  [{}]",
                r.n, r.exc, r.ratio_num, r.ratio_den, r.ratio, r.source
            );
        }
    }

    // a broom family with a theorem-backed formula reaches larger n
    let broom = parse_tree("B(9,3)").unwrap();
    println!("{} (|T| = 9):", broom.family_name());
    for r in gamma_report(&broom, [9, 18, 36, 72], ExcOptions::default()).unwrap() {
        println!(
            "  n={:<2} ex_c={:<4} ratio = {}/{} = {:.4}  [{}]",
            r.n, r.exc, r.ratio_num, r.ratio_den, r.ratio, r.source
        );
    }
}
