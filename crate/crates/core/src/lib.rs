//! Exact arithmetic for crystallographic and Bieberbach groups: holonomy
//! enumeration, torsion testing, module generator ranks and small verified
//! generating sets.

pub mod cli;
pub mod crystal;
pub mod error;
pub mod genred;
pub mod linalg;
pub mod module_rank;

pub use error::{Error, Result};
