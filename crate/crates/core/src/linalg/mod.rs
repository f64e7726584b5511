//! Exact integer and rational linear algebra.

pub mod lattice;
pub mod matrix;
pub mod normal_form;
pub mod order;
pub mod rational;

pub use lattice::{integer_kernel, lattice_index, saturate, solve_integer, Lattice, LatticeIndex, RationalLattice};
pub use matrix::{int_vector, IntMatrix, IntVector};
pub use normal_form::{extended_gcd, hnf, hnf_basis, snf, UnimodularTransform};
pub use order::{matrix_order, MatrixOrder};
pub use rational::{format_rational, parse_rational, RatMatrix, RatVector};
