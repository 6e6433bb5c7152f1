//! Integer three-axes model of single-wall carbon nanotubes.
//!
//! Honeycomb vertices are integer triples `(v0, v1, v2)` with coordinate sum
//! in `{0, 1}`; rolling the sheet along a chirality vector `c` identifies
//! `v` with `v + jc` and turns the lattice into a factor space. Everything
//! symmetry-related (axial rotation, screw operation, sublattice exchange)
//! and the nearest-neighbor tight-binding spectrum can then be computed with
//! exact integer arithmetic plus a handful of trigonometric evaluations.
//!
//! Module map:
//! - [`lattice`]: the honeycomb lattice, its metric and isometry generators
//! - [`geometry`]: Euclidean embedding, reciprocal space, hexagonal domain
//! - [`nanotube`]: chirality invariants and the factor-space lattice
//! - [`symgroup`]: the symmetry group of a chiral tube, canonical words
//! - [`spectrum`]: dispersion, eigenfunctions, allowed lines, special points
//! - [`reps`]: two-dimensional representations and Clebsch-Gordan machinery

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod geometry;
pub mod lattice;
pub mod nanotube;
pub mod reps;
pub mod spectrum;
pub mod symgroup;

pub use geometry::{KVector, PlaneVector};
pub use lattice::{LatticePoint, TranslationVector};
pub use nanotube::{ChiralityData, TubeClass, TubePoint};
pub use symgroup::GroupElement;
