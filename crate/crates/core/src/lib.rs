//! Exact-arithmetic library for classifying square tiles cut from fourfold
//! symmetric (p4) wallpaper patterns: rotation-center lattices for the four
//! general tile families and their exceptions, machine verification of the
//! induced-symmetry tables and coverage statements, and the exhaustive census
//! of 2x2 assemblies of the Eduardo Nery tile.

pub mod census;
pub mod closure;
pub mod exact;
pub mod lattice;
pub mod motif;
pub mod symdetect;

pub use exact::{frac, point, Fraction, Point};
