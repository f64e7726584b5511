//! Crystallographic groups `0 -> Z^n -> Γ -> G -> 1` with `G` a concrete
//! finite matrix group and rational lift translations.

mod affine;
mod group;
mod holonomy;
mod split;
mod torsion;

pub use affine::{affine_inv, affine_mul, affine_pow, AffineElement};
pub use group::{fixed_lattice, lift_all, BasisChange, CrystalGroup, FullLiftTable, VectorSystem};
pub use holonomy::{HolonomyGroup, DEFAULT_CAP};
pub use split::{coinvariant_split, CoinvariantSplit};
pub use torsion::{is_torsion_free, norm_matrix, TorsionVerdict};
