use crate::linalg::{saturate, snf, IntMatrix, IntVector, Lattice, UnimodularTransform};

/// Basis change putting a finite-order matrix in the shape
/// `[[A, B], [0, I_k]]`.
///
/// The first `head_dim` new basis vectors span the saturation of the image of
/// `M - I`; the last `tail_dim` complete them to a basis of `Z^n`. Old
/// coordinates are recovered as `x_old = transform.forward * x_new`.
#[derive(Clone, Debug)]
pub struct CoinvariantSplit {
    pub transform: UnimodularTransform,
    pub head_dim: usize,
    pub tail_dim: usize,
    /// `transform.inverse * M * transform.forward`.
    pub matrix: IntMatrix,
}

impl CoinvariantSplit {
    pub fn head_block(&self) -> IntMatrix {
        self.matrix.submatrix(0, self.head_dim, 0, self.head_dim)
    }

    pub fn coupling_block(&self) -> IntMatrix {
        let n = self.matrix.rows();
        self.matrix.submatrix(0, self.head_dim, self.head_dim, n)
    }
}

pub fn coinvariant_split(m: &IntMatrix) -> CoinvariantSplit {
    let n = m.rows();
    let image = Lattice::from_generator_matrix(&(m - &IntMatrix::identity(n)));
    let head = saturate(&image);
    let r = head.rank();
    let p = complete_basis(&head, n);
    let transform = UnimodularTransform::from_forward(p).expect("completion of a saturated lattice is unimodular");
    let matrix = &(&transform.inverse * m) * &transform.forward;
    CoinvariantSplit { transform, head_dim: r, tail_dim: n - r, matrix }
}

/// `[basis of head | complement]`, preferring standard basis vectors for the
/// complement so that already split matrices keep their coordinates.
fn complete_basis(head: &Lattice, n: usize) -> IntMatrix {
    let mut cols: Vec<IntVector> = head.basis_vectors();
    let mut current = head.clone();
    for j in 0..n {
        if cols.len() == n {
            break;
        }
        let e: IntVector = (0..n).map(|i| if i == j { 1.into() } else { 0.into() }).collect();
        let next = current.join(&Lattice::from_generators(n, &[e.clone()]));
        if next.rank() == current.rank() + 1 && saturate(&next) == next {
            cols.push(e);
            current = next;
        }
    }
    let candidate = IntMatrix::from_columns(n, &cols);
    if cols.len() == n && candidate.is_unimodular() {
        return candidate;
    }
    // Smith form of the head basis: U B V = [I_r; 0], so the columns of
    // U^{-1} after the first r complete the head.
    let (_, u, _) = snf(head.basis());
    let mut cols = head.basis_vectors();
    cols.extend((head.rank()..n).map(|j| u.inverse.column(j)));
    IntMatrix::from_columns(n, &cols)
}
