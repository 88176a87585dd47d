//! Gallai colorings of complete graphs.
//!
//! A Gallai coloring is an edge-coloring of `K_n` with no rainbow triangle.
//! This crate provides the coloring data model and its `.gec` text format,
//! triangle censuses, Gallai partitions, the extremal constructions behind
//! the known Gallai-Ramsey and multiplicity values, closed-form evaluators for
//! those values, and an exhaustive search used as a brute-force oracle on
//! small instances.

pub mod census;
pub mod coloring;
pub mod construct;
pub mod formulas;
pub mod grstar;
pub mod partition;
pub mod search;
pub mod suite;

pub use census::{
    count_nim_star_edges, count_protected_edges, find_mono_subgraph, is_gallai, triangle_census,
    MonoKind, MonoSubgraphReport, TriangleCensus,
};
pub use coloring::{Color, Coloring};
pub use partition::{
    coarsen_to_min_parts, find_gallai_partition, verify_gallai_partition, GallaiPartition,
};
