//! Mixed metric dimension of cactus graphs.
//!
//! A set `S` of vertices is a *mixed metric generator* when every two
//! distinct elements of `V(G) ∪ E(G)` differ in their distance to some
//! vertex of `S`, where the distance from an edge `uv` to `s` is
//! `min(d(u, s), d(v, s))`. This crate computes the minimum size of such a
//! set exactly for trees, unicyclic graphs and cacti from their cycle
//! structure, builds a minimum generator, and carries a brute-force oracle
//! for arbitrary small graphs.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, random
//! generation and the command line live in the `mixdim` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cactus;
mod error;
pub mod exact;
pub mod graph;
pub mod oracle;

pub use cactus::{
    active_marks, augment_for_triple, classify, extract_cycles, has_geodesic_triple, tv_partition,
    ActiveMark, ClassTag, CycleInfo, GraphClass, TvPartition,
};
pub use error::Error;
pub use exact::{
    bound_report, build_min_generator, delta_count, mdim_exact, BoundReport, CycleTerm,
    GeneratorCertificate, MdimReport,
};
pub use graph::{
    all_pairs_distances, build_graph, element_distance, graph_stats, DistanceMatrix, Element,
    Graph, GraphStats,
};
pub use oracle::{
    brute_force_mdim, forced_vertices, is_mixed_generator, BruteForce, OracleLimits, Verdict,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;
