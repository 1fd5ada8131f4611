//! Exact engine for domino tilings of quadriculated regions and lozenge
//! tilings of triangulated regions.
//!
//! The crate decides tileability in polynomial time via height functions,
//! constructs extremal tilings, enumerates tilings, counts them exactly with
//! signed adjacency determinants and closed product formulas, analyzes flip
//! graphs and flow invariants, and converts hexagon tilings to boxed plane
//! partitions. See the `examples/` directory for one runnable program per
//! capability, or the `tilings` binary for the command-line surface.

pub mod cli;
pub mod counting;
pub mod error;
pub mod generate;
pub mod graph;
pub mod height;
pub mod partitions;
pub mod region;
pub mod render;
pub mod tiling;

pub use counting::{
    count_tilings, det_unsigned, hexagon_count, kasteleyn_sign, rectangle_count, sign_classes,
    SignedBipartiteMatrix,
};
pub use error::{Error, Result};
pub use graph::BipartiteGraph;
pub use partitions::{
    enumerate_partitions, macmahon_series, partition_to_tiling, tiling_to_partition,
    PlanePartition,
};
pub use height::{
    heights_from_tiling, is_valid_height, max_tiling, min_tiling, tiling_from_heights,
    HeightFunction, Tileability, UntileableReason,
};
pub use region::{Cell, CellKind, Color, Cut, Lattice, Region, Vertex};
pub use render::{render_region, render_tiling, RenderFormat, RenderStyle};
pub use tiling::{
    apply_flip, available_flips, distance, enumerate_tilings, enumerate_tilings_capped,
    enumeration_count, first_tiling, flow, flow_signature, orientation_counts, Flip, FlipGraph,
    Tiling,
};
