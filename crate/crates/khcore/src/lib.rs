//! Distance-generalized core decomposition.
//!
//! The (k,h)-core of an undirected graph is the maximal induced subgraph in
//! which every vertex has at least `k` other vertices within shortest-path
//! distance `h` inside the subgraph. For `h = 1` this is the classic k-core.
//! This crate computes the full decomposition exactly with three algorithms
//! of increasing sophistication, and builds the standard applications on top
//! of it: maximum h-club search, distance-h densest subgraph, distance-h
//! coloring, cocktail-party community search and landmark selection for
//! shortest-path estimation.
//!
//! The data-parallel blocks (bulk h-degree passes) run on a rayon pool when
//! the default `parallel` feature is enabled; the same code degrades to a
//! sequential loop without it, with bit-identical results.

pub mod apps;
mod bucket;
mod decompose;
mod error;
mod exec;
mod graph;
mod traversal;

pub use bucket::BucketQueue;
pub use decompose::{
    compute_lb1, compute_lb2, compute_ub, core_decomp_interval, decompose, decompose_hbz,
    decompose_hlb, decompose_hlbub, improve_lb, naive_oracle, naive_oracle_with, Algorithm,
    CoreResult, DecomposeOptions, DecomposeStats, Diagnostics, OraclePick, PartitionPlan,
    PeelState,
};
pub use error::{Error, Result};
pub use exec::Workers;
pub use graph::{AliveMask, Graph, VertexId};
pub use traversal::{h_bfs, h_degree, induced_diameter_leq, BfsScratch, HNeighborhood, INFINITE_DISTANCE};
