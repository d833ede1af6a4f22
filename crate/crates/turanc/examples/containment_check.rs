//! Tree-containment decisions with witness maps, plus a saturation check.
//!
//! ```bash
//! cargo run --example containment_check
//! ```

use turanc::{find_embedding, is_saturated, parse_tree, Graph};

fn main() {
    // a 2-regular host cannot hold a degree-3 pattern
    let c6 = Graph::cycle(6).unwrap();
    let spider = parse_tree("S(2,1,1)").unwrap();
    println!(
        "C_6 contains S(2,1,1): {}",
        find_embedding(&c6, &spider).is_some()
    );

    // K_4 has a Hamiltonian path
    let k4 = Graph::complete(4).unwrap();
    let p4 = parse_tree("P4").unwrap();
    let emb = find_embedding(&k4, &p4).unwrap();
    println!("K_4 contains P4 via map {:?}", emb.map);

    // weight obstruction: every edge of K_{2,6} has an endpoint of degree 2
    let host = Graph::complete_bipartite(2, 6).unwrap();
    let d22 = parse_tree("D(2,2)").unwrap();
    println!(
        "K_2,6 contains D(2,2): {}",
        find_embedding(&host, &d22).is_some()
    );

    // saturation: K_2 + E_5 is S(2,2,1)-free but every added edge creates it
    let split = Graph::complete(2)
        .unwrap()
        .join(&Graph::empty(5).unwrap())
        .unwrap();
    let s221 = parse_tree("S(2,2,1)").unwrap();
    println!(
        "K_2+E_5 is S(2,2,1)-saturated: {}",
        is_saturated(&split, &s221).unwrap()
    );

    // C_7 is S(2,2,2)-free, but some chord additions keep it free
    let c7 = Graph::cycle(7).unwrap();
    let s222 = parse_tree("S(2,2,2)").unwrap();
    println!(
        "C_7 is S(2,2,2)-saturated: {}",
        is_saturated(&c7, &s222).unwrap()
    );
}
