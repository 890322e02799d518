//! Spanning trees of the `n x n` square grid with short fundamental cycles.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! - [`grid`]: the n-grid, canonical edge ids, peripheral vertices, 5x5 tilings
//!   and concentric cycles;
//! - [`tree`]: spanning trees with logarithmic-time fundamental-cycle queries,
//!   cycle bounding boxes and the aggregate statistics;
//! - [`construction`]: the recursive tree `T_n` whose fundamental cycles sum
//!   to at most `10 n^2 log2 n`;
//! - [`expanded`]: expanded grids (duplicated peripheral vertices plus extra
//!   boundary edges), contraction onto subgrids, rerouted concentric walks,
//!   winding numbers and the long-edge witnesses behind the lower bound;
//! - [`search`]: Matrix-Tree counting, exhaustive enumeration, uniform
//!   sampling and edge-swap local search;
//! - [`matroid`]: the echelon-form GF(2) representation of the graphic matroid
//!   and its number of ones.
//!
//! File formats, reports and the command-line driver live in the companion
//! `gridcycle` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod construction;
mod error;
pub mod expanded;
pub mod grid;
pub mod matroid;
mod planarity;
mod rooted;
pub mod search;
pub mod tree;

pub use error::{Error, Result, TreeDefect};
pub use grid::{Edge, GridCoord, GridGraph, Orientation, SubgridRef};
pub use tree::{ChordRecord, CycleBox, CycleStats, SpanningTree};
