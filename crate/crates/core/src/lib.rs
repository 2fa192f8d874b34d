//! Recognition and certification toolkit for strong cocomparability graphs:
//! reflexive graphs admitting a vertex ordering whose adjacency matrix has no
//! Slash submatrix [[0,1],[1,0]] in rows i < j and columns k < l.
//!
//! Two independent recognition routes are provided — invertible pairs in the
//! pair graph, and comparability of the avoidance graph G* — together with
//! checkable certificates for both answers, brute-force oracles, and an
//! exhaustive small-graph cross-check harness.

pub mod avoidance;
pub mod certificates;
pub mod comparability;
pub mod constructions;
pub mod error;
pub mod forcing;
pub mod graph;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{
    decode_graph, Bigraph, Decoded, EdgeRef, Graph, GraphKind, SimpleGraph, VertexOrdering,
};

pub use avoidance::{avoids, build_avoidance_graph, recognize_via_avoidance, AvoidanceGraph};
pub use certificates::{
    complement_asteroid_to_wea, extract_weak_edge_asteroid, invertible_pair_from_wea,
    search_strong_ordering, verify_asteroid, verify_weak_edge_asteroid, wea_to_complement_asteroid,
    Asteroid, SearchOutcome, Walk, WeakEdgeAsteroid,
};
pub use comparability::{
    implication_classes, recognize_cocomparability, recognize_comparability, verify_transitive,
    Orientation,
};
pub use constructions::{
    bipartite_double, close_both_sides, generate, recognize_cocomparability_bigraph, Family,
};
pub use forcing::{
    build_pair_graph, find_invertible_pair, forces, recognize_strong_cocomparability, Decision,
    InvertiblePair, PairGraph, PairNode,
};
pub use oracle::{
    crosscheck_enumerate, emit_report, graph_from_mask, oracle_cocomp_bigraph,
    oracle_comparability, oracle_strong_cocomp, Report, ReportFormat,
};
