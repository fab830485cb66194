//! Finite-window constructions and brute-force checkers for minimal
//! 2-colorings of `ℤ²`.
//!
//! Every object here is a finite piece of data: partial `{0,1}`
//! configurations on rectangles, forcing conditions that carry their own
//! witness sets, leveled families of finite classes (toast), and rectangular
//! marker partitions. The crate builds arbitrarily large windows of generic
//! points by meeting dense requirements one at a time, and re-verifies every
//! property that a finite window can certify.
//!
//! Modules:
//!
//! * [`lattice`]: points, rectangles, the taxicab norm, lattices.
//! * [`config`]: partial configurations, flips, tilings, pattern search,
//!   boundaries.
//! * [`witness`]: verifiers for 2-coloring, minimality, recurrence, odd
//!   recurrence, lattice containment and chromatic colorings.
//! * [`forcing_mt`]: the minimal 2-coloring conditions (and the odd-sided
//!   variant) with their density constructions and a generic builder.
//! * [`forcing_gp`]: grid periodicity conditions, the tiling order, a
//!   generic builder, periodicity and lattice analyses.
//! * [`markers`] and [`toast`]: rectangular marker partitions, the
//!   shifted-stack layout, toast axioms and the boundary-distance profile.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod config;
pub mod error;
pub mod forcing_gp;
pub mod forcing_mt;
pub mod lattice;
pub mod markers;
pub mod toast;
pub mod witness;

pub use config::{boundary, find_occurrences, tile, Config, PatternSet};
pub use error::{Error, Result};
pub use lattice::{dist_to_set, lattice_points_in, taxicab_norm, Distance, Lattice, Point, PointSet, Rect};
