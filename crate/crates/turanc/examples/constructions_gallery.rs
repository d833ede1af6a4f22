//! Build one witness graph per generator, print its graph6 and edge count,
//! and double-check freeness of the pattern it is designed to avoid.
//!
//! ```bash
//! cargo run --example constructions_gallery
//! ```

use turanc::construct;
use turanc::{contains_tree, parse_tree, to_graph6, ConstructionResult, Tree};

fn show(result: &ConstructionResult, avoid: Option<&Tree>) {
    let free = avoid.map(|t| !contains_tree(&result.graph, t));
    println!(
        "{:<22} n={:<3} e={:<3} {:<18} {}",
        result.name,
        result.graph.vertex_count(),
        result.claimed_edges,
        to_graph6(&result.graph).unwrap(),
        match (avoid, free) {
            (Some(t), Some(true)) => format!("{}-free: yes", t.family_name()),
            (Some(t), Some(false)) => format!("{}-free: NO (bug!)", t.family_name()),
            _ => String::new(),
        }
    );
}

fn main() {
    let n = 12;

    let p6 = parse_tree("P6").unwrap();
    show(&construct::kopylov(n, 5, 2).unwrap(), Some(&p6));
    show(&construct::prop2_longest_path(&p6, n).unwrap(), Some(&p6));

    let d23 = parse_tree("D(2,3)").unwrap();
    show(&construct::prop2_induced_path(&d23, n).unwrap(), Some(&d23));
    show(
        &construct::prop2_induced_path_spider(&d23, 29).unwrap(),
        Some(&d23),
    );
    show(&construct::prop2_delta2(&d23, 13).unwrap(), Some(&d23));

    let s4 = parse_tree("S4").unwrap();
    show(&construct::nearly_regular(n, 3).unwrap(), Some(&s4));

    let s221 = parse_tree("S(2,2,1)").unwrap();
    show(&construct::clique_join_empty(2, n).unwrap(), Some(&s221));
    show(&construct::cycle_of_cliques(n, 2).unwrap(), Some(&s221));

    let d22 = parse_tree("D(2,2)").unwrap();
    show(
        &construct::complete_bipartite(2, n - 2).unwrap(),
        Some(&d22),
    );

    let s311 = parse_tree("S(3,1,1)").unwrap();
    show(
        &construct::branch_construction(&s311, n).unwrap(),
        Some(&s311),
    );

    show(&construct::path_of_cliques(n, 4).unwrap(), None);

    println!();
    println!("table constructions at n = {n}:");
    for name in construct::NAMED_SMALL {
        show(&construct::named_small(name, n).unwrap(), None);
    }
}
