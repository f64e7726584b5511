use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::matrix::{IntMatrix, IntVector};
use crate::linalg::normal_form::{hnf, hnf_basis};
use crate::linalg::rational::RatVector;

/// A sublattice of `Z^n`, stored as the non-zero columns of its column HNF.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient_dim: usize,
    basis: IntMatrix,
}

impl Lattice {
    /// Lattice spanned by the columns of `generators` (which need not be
    /// independent).
    pub fn from_generator_matrix(generators: &IntMatrix) -> Self {
        let h = hnf_basis(generators);
        let first = (0..h.cols()).find(|&j| !h.column(j).iter().all(Zero::is_zero));
        let basis = match first {
            Some(f) => h.submatrix(0, h.rows(), f, h.cols()),
            None => IntMatrix::zeros(h.rows(), 0),
        };
        Self { ambient_dim: generators.rows(), basis }
    }

    pub fn from_generators(ambient_dim: usize, vectors: &[IntVector]) -> Self {
        Self::from_generator_matrix(&IntMatrix::from_columns(ambient_dim, vectors))
    }

    pub fn full(n: usize) -> Self {
        Self { ambient_dim: n, basis: IntMatrix::identity(n) }
    }

    pub fn zero(n: usize) -> Self {
        Self { ambient_dim: n, basis: IntMatrix::zeros(n, 0) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Basis vectors as columns, in canonical HNF.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<IntVector> {
        self.basis.columns()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    /// True when the lattice is all of `Z^n`.
    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_dim
            && (0..self.rank()).all(|j| {
                // pivot of column j sits in row j for a full-rank HNF
                self.basis[(j, j)].is_one()
            })
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        solve_integer(&self.basis, v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Sum of two lattices.
    pub fn join(&self, other: &Lattice) -> Lattice {
        Lattice::from_generator_matrix(&self.basis.hstack(&other.basis))
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice(rank {} in Z^{}, basis {})", self.rank(), self.ambient_dim, self.basis)
    }
}

/// `{v in Z^cols : M v = 0}`, saturated by construction.
pub fn integer_kernel(m: &IntMatrix) -> Lattice {
    let n = m.cols();
    if m.rows() == 0 {
        return Lattice::full(n);
    }
    let (h, u) = hnf(m);
    let zero_cols: Vec<IntVector> = (0..h.cols())
        .take_while(|&j| h.column(j).iter().all(Zero::is_zero))
        .map(|j| u.forward.column(j))
        .collect();
    Lattice::from_generators(n, &zero_cols)
}

/// Integer solution of `M x = b`, if one exists.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<IntVector> {
    assert_eq!(m.rows(), b.len(), "right-hand side length mismatch");
    let (h, u) = hnf(m);
    solve_hnf(&h, b).map(|y| u.forward.mul_vec(&y))
}

/// Solves `H y = b` for `H` in the column HNF produced by [`hnf`].
fn solve_hnf(h: &IntMatrix, b: &[BigInt]) -> Option<IntVector> {
    let rows = h.rows();
    let cols = h.cols();
    let mut y = vec![BigInt::zero(); cols];
    let mut residual = b.to_vec();
    let mut col = cols;
    for row in (0..rows).rev() {
        // The next pivot column (moving left) has its pivot in this row or above.
        let pivot_here = col > 0 && {
            let c = col - 1;
            !h[(row, c)].is_zero() && (row + 1..rows).all(|r| h[(r, c)].is_zero())
        };
        if pivot_here {
            let c = col - 1;
            let (q, r) = residual[row].div_rem(&h[(row, c)]);
            if !r.is_zero() {
                return None;
            }
            for i in 0..=row {
                let delta = &h[(i, c)] * &q;
                residual[i] -= delta;
            }
            y[c] = q;
            col -= 1;
        } else if !residual[row].is_zero() {
            return None;
        }
    }
    residual.iter().all(Zero::is_zero).then_some(y)
}

/// `(Q-span of L) ∩ Z^n`.
pub fn saturate(l: &Lattice) -> Lattice {
    let n = l.ambient_dim();
    if l.rank() == 0 {
        return Lattice::zero(n);
    }
    // vectors orthogonal to L, then everything orthogonal to those
    let orthogonal = integer_kernel(&l.basis().transpose());
    if orthogonal.rank() == 0 {
        return Lattice::full(n);
    }
    integer_kernel(&orthogonal.basis().transpose())
}

/// Result of [`lattice_index`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

/// `[sup : sub]`.
pub fn lattice_index(sub: &Lattice, sup: &Lattice) -> Result<LatticeIndex> {
    if sub.ambient_dim() != sup.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: sup.ambient_dim(),
            found: sub.ambient_dim(),
        });
    }
    // coordinates of sub's basis in terms of sup's basis
    let mut coords = Vec::with_capacity(sub.rank());
    for v in sub.basis_vectors() {
        coords.push(solve_integer(sup.basis(), &v).ok_or(Error::NotASublattice)?);
    }
    if sub.rank() < sup.rank() {
        return Ok(LatticeIndex::Infinite);
    }
    let c = IntMatrix::from_columns(sup.rank(), &coords);
    Ok(LatticeIndex::Finite(c.det()?.abs()))
}

/// A lattice `(1/denominator) * numerators` in `Q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalLattice {
    pub denominator: BigInt,
    pub numerators: Lattice,
}

impl RationalLattice {
    /// Z-span of rational vectors.
    pub fn from_generators(n: usize, vectors: &[RatVector]) -> Self {
        let d = vectors.iter().fold(BigInt::one(), |acc, v| acc.lcm(&v.common_denominator()));
        let scaled: Vec<IntVector> = vectors
            .iter()
            .map(|v| v.iter().map(|q| (q * &d).to_integer()).collect())
            .collect();
        let numerators = Lattice::from_generators(n, &scaled);
        Self { denominator: d, numerators }.reduced()
    }

    /// Removes common factors between the denominator and the lattice.
    fn reduced(self) -> Self {
        let g = self
            .numerators
            .basis()
            .entries()
            .iter()
            .fold(self.denominator.clone(), |acc, e| acc.gcd(e));
        if g.is_one() || g.is_zero() {
            return self;
        }
        let n = self.numerators.ambient_dim();
        let vectors: Vec<IntVector> = self
            .numerators
            .basis_vectors()
            .into_iter()
            .map(|v| v.into_iter().map(|e| e / &g).collect())
            .collect();
        Self { denominator: &self.denominator / &g, numerators: Lattice::from_generators(n, &vectors) }
    }

    /// True when this is exactly `Z^n`.
    pub fn is_standard(&self) -> bool {
        self.denominator.is_one() && self.numerators.is_full()
    }

    pub fn rank(&self) -> usize {
        self.numerators.rank()
    }

    pub fn contains(&self, v: &RatVector) -> bool {
        let scaled: Vec<BigRational> = v.iter().map(|q| q * &self.denominator).collect();
        if !scaled.iter().all(|q| q.is_integer()) {
            return false;
        }
        let ints: IntVector = scaled.iter().map(|q| q.to_integer()).collect();
        self.numerators.contains(&ints)
    }
}
