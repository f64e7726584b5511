use thiserror::Error;

use crate::crystal::AffineElement;

/// Errors raised by the library operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not unimodular (|det| must be 1)")]
    NotUnimodular,
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("lattice is not contained in the super-lattice")]
    NotASublattice,
    #[error("matrix group is infinite or exceeds the enumeration cap of {0} elements")]
    InfiniteOrExceedsCap(usize),
    #[error("group lattice is not normalized (translation subgroup differs from Z^n)")]
    NotNormalized,
    #[error("no faithful action of C_{p} on Z^{n} (needs n >= p - 1)")]
    NoFaithfulAction { p: u64, n: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("no 2-dimensional block of order four in the supplied decomposition")]
    NoOrderFourBlock,
    #[error("invalid block decomposition: {0}")]
    InvalidBlocks(String),
    #[error("holonomy has the wrong shape for this construction: {0}")]
    WrongHolonomyShape(String),
    #[error("input group has torsion, witness {0}")]
    InputNotTorsionFree(Box<AffineElement>),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("the supplied pair does not generate the holonomy group")]
    NotAGeneratingPair,
    #[error("element {index} is not a member of the group: {reason}")]
    NotASubset { index: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
