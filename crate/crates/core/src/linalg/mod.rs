//! Exact integer, rational and Gaussian-rational arithmetic, plus the
//! integer normal forms used for lattice bookkeeping.

mod lattice;
mod matrix;
mod normal_form;
mod rational;

pub use lattice::{affine_lattice_index, kernel_basis, make_primitive};
pub use matrix::{add_vec, affine_dimension, dot, int_vec, rank_of_rows, signum, sub_vec, IntMat, IntVec};
pub use normal_form::{hermite_normal_form, smith_normal_form, Hermite, Smith};
pub use rational::{format_rat, integer_membership, parse_rat, rat_to_f64, split_floor, BigRat, GaussRat, ParseError};
