use num_bigint::BigInt;
use num_traits::One;

use crate::crystal::HolonomyGroup;
use crate::error::Result;
use crate::linalg::{snf, IntMatrix, IntVector, Lattice};

/// `Z^n` with a finite group acting by the listed matrices.
#[derive(Clone, Debug)]
pub struct GModule {
    group: HolonomyGroup,
}

impl GModule {
    pub fn from_holonomy(group: &HolonomyGroup) -> Self {
        Self { group: group.clone() }
    }

    pub fn from_generators(dim: usize, generators: &[IntMatrix], cap: usize) -> Result<Self> {
        Ok(Self { group: HolonomyGroup::enumerate(dim, generators, cap)? })
    }

    /// The cyclic group generated by a single finite-order matrix.
    pub fn cyclic(m: &IntMatrix, cap: usize) -> Result<Self> {
        Self::from_generators(m.rows(), std::slice::from_ref(m), cap)
    }

    pub fn dim(&self) -> usize {
        self.group.dim()
    }

    pub fn group(&self) -> &HolonomyGroup {
        &self.group
    }

    pub fn generators(&self) -> &[IntMatrix] {
        self.group.generators()
    }

    pub fn elements(&self) -> &[IntMatrix] {
        self.group.elements()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Order of the acting group when it is cyclic.
    pub fn cyclic_order(&self) -> Option<usize> {
        self.group.cyclic_generator().map(|_| self.order())
    }

    /// Lattice spanned by the orbit of `v`.
    pub fn orbit_lattice(&self, v: &[BigInt]) -> Lattice {
        let images: Vec<IntVector> = self.elements().iter().map(|g| g.mul_vec(v)).collect();
        Lattice::from_generators(self.dim(), &images)
    }
}

/// Does `vectors` generate `Z^n` as a module over the group ring?
pub fn zg_span_is_full(vectors: &[IntVector], module: &GModule) -> bool {
    let n = module.dim();
    let images: Vec<IntVector> = vectors
        .iter()
        .flat_map(|v| module.elements().iter().map(move |g| g.mul_vec(v)))
        .collect();
    Lattice::from_generators(n, &images).is_full()
}

/// Minimal number of generators of the coinvariants `Z^n / span{(g - I) x}`:
/// free rank plus the number of non-trivial torsion factors.
pub fn coinvariant_lower_bound(module: &GModule) -> usize {
    let n = module.dim();
    if module.generators().is_empty() {
        return n;
    }
    let id = IntMatrix::identity(n);
    let stacked = module
        .generators()
        .iter()
        .fold(IntMatrix::zeros(n, 0), |acc, g| acc.hstack(&(g - &id)));
    let (s, _, _) = snf(&stacked);
    (0..n).filter(|&i| !s[(i, i)].is_one()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::DEFAULT_CAP;
    use crate::linalg::int_vector;

    fn rot4() -> GModule {
        GModule::cyclic(&IntMatrix::from_rows(&[[0, 1], [-1, 0]]), DEFAULT_CAP).unwrap()
    }

    #[test]
    fn span_examples() {
        let m = rot4();
        assert!(zg_span_is_full(&[int_vector(&[1, 0]), int_vector(&[0, 1])], &m));
        assert!(zg_span_is_full(&[int_vector(&[0, 1])], &m));
        assert!(!zg_span_is_full(&[int_vector(&[1, 1])], &m));
        let trivial = GModule::from_generators(2, &[], DEFAULT_CAP).unwrap();
        assert!(!zg_span_is_full(&[int_vector(&[1, 0])], &trivial));
    }

    #[test]
    fn lower_bounds() {
        let trivial = GModule::from_generators(3, &[], DEFAULT_CAP).unwrap();
        assert_eq!(coinvariant_lower_bound(&trivial), 3);
        let trivial = GModule::from_generators(3, &[IntMatrix::identity(3)], DEFAULT_CAP).unwrap();
        assert_eq!(coinvariant_lower_bound(&trivial), 3);
        assert_eq!(coinvariant_lower_bound(&rot4()), 1);
        let c3 = GModule::cyclic(&IntMatrix::from_rows(&[[0, -1], [1, -1]]), DEFAULT_CAP).unwrap();
        assert_eq!(coinvariant_lower_bound(&c3), 1);
        let c6 = GModule::cyclic(&IntMatrix::from_rows(&[[0, -1], [1, 1]]), DEFAULT_CAP).unwrap();
        assert_eq!(coinvariant_lower_bound(&c6), 0);
    }
}
