//! Characteristic polynomials of the monodromy at infinity of
//! A-hypergeometric functions, computed exactly from the lattice polytope
//! of the configuration.
//!
//! The pipeline is: validate a [`Configuration`](gkz::Configuration), build
//! its exact hull ([`polytope::convex_hull`]), check non-resonance of the
//! parameter, then read off one factor `(t^d - exp(-2πiδ))^vol` per facet
//! that misses the chosen point.

pub mod charpoly;
pub mod gkz;
pub mod linalg;
pub mod polytope;

pub use charpoly::{FactoredCharPoly, MonodromyFactor};
pub use gkz::{Configuration, GkzError, Parameter, ResonanceReport};
pub use linalg::{BigRat, GaussRat, IntVec};
