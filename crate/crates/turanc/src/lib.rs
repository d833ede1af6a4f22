//! Connected Turán numbers of trees at desk scale: exact tree embedding,
//! lower-bound constructions, closed-form bounds, and an exhaustive
//! isomorph-free enumeration oracle that certifies the small exact values.
//!
//! ```
//! use turanc::{contains_tree, exc_bruteforce, parse_tree, ExcOptions, Graph};
//!
//! // no connected 6-vertex graph with 7 or more edges avoids the spider
//! let spider = parse_tree("S(2,1,1)").unwrap();
//! let record = exc_bruteforce(&spider, 6, ExcOptions::default()).unwrap();
//! assert_eq!(record.max_edges, 6);
//!
//! // ... and the cycle is the witness that 6 edges are possible
//! assert!(!contains_tree(&Graph::cycle(6).unwrap(), &spider));
//! ```

pub mod bounds;
pub mod canon;
pub mod construct;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod params;
pub mod tables;
pub mod tree;

pub use bounds::{
    evaluate_all_bounds, gamma_report, known_exact, kopylov_upper_path, BoundEvaluation,
};
pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use construct::ConstructionResult;
pub use embed::{contains_tree, find_embedding, is_saturated, Embedding};
pub use enumerate::{
    connected_graphs, enumerate_connected, exc_bruteforce, exc_cached, monotonicity_scan,
    ExcOptions, ExcRecord, ScanPoint,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use graph6::{from_graph6, to_dot, to_graph6};
pub use matching::matching_number;
pub use params::{tree_params, TreeParams};
pub use tree::{parse_tree, Tree, TreeExpr};
