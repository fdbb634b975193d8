//! Exact combinatorics of the enhanced nilpotent cone `V × N`.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`combinatorics`]: partitions, bipartitions, the closure order on
//!   bipartitions and its covering relations;
//! * [`exactalg`]: integer polynomials, rational functions and the symmetric
//!   `L D Lᵗ` decomposition over `ℚ(t)`;
//! * [`weylb`]: characters and fake degrees of the hyperoctahedral group and
//!   the `Ω` pairing matrix;
//! * [`shoji`]: Kostka numbers and polynomials, the Lusztig–Shoji solve and
//!   the derived intersection-cohomology, fibre, orbit-count and Hall
//!   polynomials;
//! * [`fqoracle`]: brute-force enumeration over prime fields used as ground
//!   truth for all of the above.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod combinatorics;
mod error;
pub mod exactalg;
pub mod fqoracle;
mod report;
pub mod shoji;
pub mod weylb;

pub use combinatorics::{Bipartition, CoverKind, CoverType, Partition};
pub use error::Error;
pub use report::CheckReport;
pub use exactalg::{IntPoly, PolyMatrix, RationalFunction};

pub type Result<T> = core::result::Result<T, Error>;
