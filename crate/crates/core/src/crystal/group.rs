use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::crystal::affine::{affine_inv, affine_mul, affine_pow, AffineElement};
use crate::crystal::holonomy::HolonomyGroup;
use crate::error::{Error, Result};
use crate::linalg::{integer_kernel, IntMatrix, Lattice, RatMatrix, RatVector, RationalLattice, UnimodularTransform};

/// Translation part of the chosen lift of each holonomy generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSystem {
    translations: Vec<RatVector>,
}

impl VectorSystem {
    pub fn new(translations: Vec<RatVector>) -> Self {
        Self { translations }
    }

    pub fn get(&self, s: usize) -> &RatVector {
        &self.translations[s]
    }

    pub fn len(&self) -> usize {
        self.translations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.translations.is_empty()
    }

    pub fn as_slice(&self) -> &[RatVector] {
        &self.translations
    }
}

/// One lift translation `a_g` per holonomy element, built along the
/// breadth-first tree: `a_{g s} = a_g + g a_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullLiftTable {
    translations: Vec<RatVector>,
}

impl FullLiftTable {
    pub fn get(&self, g: usize) -> &RatVector {
        &self.translations[g]
    }

    pub fn len(&self) -> usize {
        self.translations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.translations.is_empty()
    }
}

/// Rational change of coordinates, `x_old = forward * x_new`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    pub forward: RatMatrix,
    pub inverse: RatMatrix,
}

impl BasisChange {
    pub fn identity(n: usize) -> Self {
        Self { forward: RatMatrix::identity(n), inverse: RatMatrix::identity(n) }
    }

    pub fn from_unimodular(u: &UnimodularTransform) -> Self {
        Self { forward: u.forward.to_rat(), inverse: u.inverse.to_rat() }
    }

    pub fn is_identity(&self) -> bool {
        self.forward.is_identity()
    }

    pub fn to_new(&self, v: &RatVector) -> RatVector {
        self.inverse.mul_vec(v)
    }

    pub fn to_old(&self, v: &RatVector) -> RatVector {
        self.forward.mul_vec(v)
    }
}

/// A crystallographic group given by a finite holonomy group and one lift
/// per holonomy generator. The lattice `Z^n` is always contained.
#[derive(Clone, Debug)]
pub struct CrystalGroup {
    name: Option<String>,
    holonomy: HolonomyGroup,
    lifts: VectorSystem,
    lift_table: FullLiftTable,
    translations: RationalLattice,
}

impl CrystalGroup {
    pub fn new(name: Option<String>, holonomy: HolonomyGroup, lifts: VectorSystem) -> Result<Self> {
        let n = holonomy.dim();
        if lifts.len() != holonomy.generators().len() {
            return Err(Error::DimensionMismatch {
                expected: holonomy.generators().len(),
                found: lifts.len(),
            });
        }
        if let Some(bad) = lifts.as_slice().iter().find(|v| v.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.dim() });
        }
        let lift_table = lift_all(&holonomy, &lifts);
        let translations = translation_lattice(&holonomy, &lifts, &lift_table);
        Ok(Self { name, holonomy, lifts, lift_table, translations })
    }

    pub fn from_generators(
        name: Option<String>,
        dim: usize,
        generators: &[IntMatrix],
        lifts: Vec<RatVector>,
        cap: usize,
    ) -> Result<Self> {
        let holonomy = HolonomyGroup::enumerate(dim, generators, cap)?;
        Self::new(name, holonomy, VectorSystem::new(lifts))
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.holonomy.dim()
    }

    pub fn holonomy(&self) -> &HolonomyGroup {
        &self.holonomy
    }

    pub fn lifts(&self) -> &VectorSystem {
        &self.lifts
    }

    pub fn lift_table(&self) -> &FullLiftTable {
        &self.lift_table
    }

    /// Chosen lift `(a_g, g)` of holonomy element `g`.
    pub fn lift(&self, g: usize) -> AffineElement {
        AffineElement::new(self.lift_table.get(g).clone(), g)
    }

    /// Lift of holonomy generator `s` as given in the input.
    pub fn generator_lift(&self, s: usize) -> AffineElement {
        AffineElement::new(self.lifts.get(s).clone(), self.holonomy.generator_index(s))
    }

    pub fn mul(&self, p: &AffineElement, q: &AffineElement) -> AffineElement {
        affine_mul(p, q, &self.holonomy)
    }

    pub fn inv(&self, p: &AffineElement) -> AffineElement {
        affine_inv(p, &self.holonomy)
    }

    pub fn pow(&self, p: &AffineElement, k: i64) -> AffineElement {
        affine_pow(p, k, &self.holonomy)
    }

    /// The pure translations of the group, `Γ ∩ (R^n × I)`.
    pub fn translation_subgroup(&self) -> &RationalLattice {
        &self.translations
    }

    /// True when the translation subgroup is exactly `Z^n`.
    pub fn is_normalized(&self) -> bool {
        self.translations.is_standard()
    }

    /// Membership: valid holonomy index and translation in the lift coset.
    pub fn contains(&self, p: &AffineElement) -> bool {
        p.holonomy < self.holonomy.order()
            && p.translation.dim() == self.dim()
            && self.translations.contains(&(&p.translation - self.lift_table.get(p.holonomy)))
    }

    /// Re-expresses the group in coordinates where its translation subgroup
    /// is `Z^n`.
    pub fn normalize_lattice(&self) -> Result<(CrystalGroup, BasisChange)> {
        let n = self.dim();
        if self.is_normalized() {
            return Ok((self.clone(), BasisChange::identity(n)));
        }
        if self.translations.rank() != n {
            return Err(Error::InternalContradiction("translation subgroup is not full rank".into()));
        }
        let scale = BigRational::new(BigInt::one(), self.translations.denominator.clone());
        let forward = RatMatrix::from_int(self.translations.numerators.basis()).scale(&scale);
        let inverse = forward
            .inverse()
            .ok_or_else(|| Error::InternalContradiction("singular lattice basis".into()))?;
        let change = BasisChange { forward, inverse };
        let group = self.change_basis(&change)?;
        if !group.is_normalized() {
            return Err(Error::InternalContradiction("normalization did not reach Z^n".into()));
        }
        Ok((group, change))
    }

    /// The same group in new coordinates. Fails with `NotUnimodular` when
    /// some holonomy matrix stops being integral.
    pub fn change_basis(&self, change: &BasisChange) -> Result<CrystalGroup> {
        let holonomy = self
            .holonomy
            .conjugated(&change.forward, &change.inverse)
            .ok_or(Error::NotUnimodular)?;
        let lifts = self.lifts.as_slice().iter().map(|a| change.to_new(a)).collect();
        CrystalGroup::new(self.name.clone(), holonomy, VectorSystem::new(lifts))
    }

    /// Subgroup `⟨Z^n, elements⟩` as a crystallographic group in its own
    /// right (the holonomy is re-enumerated, so indices change).
    pub fn subgroup_with_lattice(&self, elements: &[AffineElement]) -> Result<CrystalGroup> {
        let gens: Vec<IntMatrix> = elements.iter().map(|e| self.holonomy.element(e.holonomy).clone()).collect();
        let lifts = elements.iter().map(|e| e.translation.clone()).collect();
        let cap = self.holonomy.order() + 1;
        CrystalGroup::from_generators(self.name.clone(), self.dim(), &gens, lifts, cap)
    }

    /// Maps an element of a subgroup built by [`Self::subgroup_with_lattice`]
    /// back into this group's holonomy indexing.
    pub fn embed_from(&self, sub: &CrystalGroup, e: &AffineElement) -> AffineElement {
        let m = sub.holonomy.element(e.holonomy);
        let idx = self.holonomy.index_of(m).expect("subgroup holonomy lies in the group");
        AffineElement::new(e.translation.clone(), idx)
    }
}

/// Lift table along the breadth-first tree of the holonomy enumeration.
pub fn lift_all(holonomy: &HolonomyGroup, lifts: &VectorSystem) -> FullLiftTable {
    let n = holonomy.dim();
    let mut translations = vec![RatVector::zeros(n); holonomy.order()];
    for i in 1..holonomy.order() {
        let (parent, s) = holonomy.tree_parent(i).expect("non-identity elements have a parent");
        let moved = holonomy.element(parent).mul_rat_vec(lifts.get(s));
        translations[i] = &translations[parent] + &moved;
    }
    FullLiftTable { translations }
}

/// `Z^n` plus every Schreier translation `a_g + g a_s - a_{gs}`.
fn translation_lattice(holonomy: &HolonomyGroup, lifts: &VectorSystem, table: &FullLiftTable) -> RationalLattice {
    let n = holonomy.dim();
    let mut vectors: Vec<RatVector> = (0..n).map(|i| RatVector::unit(n, i)).collect();
    for g in 0..holonomy.order() {
        for s in 0..lifts.len() {
            let gs = holonomy.mul_generator(g, s);
            let moved = holonomy.element(g).mul_rat_vec(lifts.get(s));
            let t = &(table.get(g) + &moved) - table.get(gs);
            if !t.is_integral() {
                vectors.push(t);
            }
        }
    }
    RationalLattice::from_generators(n, &vectors)
}

/// Vectors fixed by every listed matrix (the fixed lattice of the group
/// they generate).
pub fn fixed_lattice(matrices: &[IntMatrix], n: usize) -> Lattice {
    let id = IntMatrix::identity(n);
    let stacked = matrices
        .iter()
        .fold(IntMatrix::zeros(0, n), |acc, m| acc.vstack(&(m - &id)));
    integer_kernel(&stacked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::holonomy::DEFAULT_CAP;
    use crate::linalg::int_vector;

    fn klein() -> CrystalGroup {
        CrystalGroup::from_generators(
            None,
            2,
            &[IntMatrix::diagonal(&[1, -1])],
            vec![RatVector::from_fractions(&[(1, 2), (0, 1)])],
            DEFAULT_CAP,
        )
        .unwrap()
    }

    #[test]
    fn lift_table_follows_tree() {
        let g = klein();
        assert_eq!(g.lift_table().get(0), &RatVector::zeros(2));
        assert_eq!(g.lift_table().get(1), &RatVector::from_fractions(&[(1, 2), (0, 1)]));
        assert!(g.is_normalized());
    }

    #[test]
    fn extra_translation_enlarges_lattice() {
        let g = CrystalGroup::from_generators(
            None,
            2,
            &[IntMatrix::identity(2)],
            vec![RatVector::from_fractions(&[(1, 2), (0, 1)])],
            DEFAULT_CAP,
        )
        .unwrap();
        assert!(!g.is_normalized());
        assert!(g.translation_subgroup().contains(&RatVector::from_fractions(&[(1, 2), (0, 1)])));
        let (h, change) = g.normalize_lattice().unwrap();
        assert!(h.is_normalized());
        assert_eq!(change.to_new(&RatVector::from_fractions(&[(1, 2), (0, 1)])), RatVector::from_i64(&[1, 0]));
        let (again, same) = h.normalize_lattice().unwrap();
        assert!(same.is_identity());
        assert_eq!(again.lifts(), h.lifts());
    }

    #[test]
    fn fixed_lattices() {
        let f = fixed_lattice(&[IntMatrix::diagonal(&[1, -1])], 2);
        assert_eq!(f, Lattice::from_generators(2, &[int_vector(&[1, 0])]));
        let f = fixed_lattice(&[IntMatrix::from_rows(&[[0, 1], [-1, 0]])], 2);
        assert_eq!(f.rank(), 0);
        assert_eq!(fixed_lattice(&[], 3).rank(), 3);
    }

    #[test]
    fn membership() {
        let g = klein();
        assert!(g.contains(&AffineElement::new(RatVector::from_fractions(&[(3, 2), (5, 1)]), 1)));
        assert!(!g.contains(&AffineElement::new(RatVector::from_fractions(&[(0, 1), (0, 1)]), 1)));
        assert!(!g.contains(&AffineElement::new(RatVector::zeros(2), 7)));
    }
}
