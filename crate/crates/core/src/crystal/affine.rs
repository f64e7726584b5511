use std::fmt;

use crate::crystal::holonomy::HolonomyGroup;
use crate::linalg::RatVector;

/// An element `(a, g)` acting by `x -> g x + a`; `g` is an index into a
/// holonomy table.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineElement {
    pub translation: RatVector,
    pub holonomy: usize,
}

impl AffineElement {
    pub fn new(translation: RatVector, holonomy: usize) -> Self {
        Self { translation, holonomy }
    }

    pub fn identity(n: usize) -> Self {
        Self { translation: RatVector::zeros(n), holonomy: 0 }
    }

    /// Pure translation `(v, I)`.
    pub fn translation(v: RatVector) -> Self {
        Self { translation: v, holonomy: 0 }
    }

    /// `ι(e_i)`.
    pub fn lattice_unit(n: usize, i: usize) -> Self {
        Self::translation(RatVector::unit(n, i))
    }

    pub fn is_identity(&self) -> bool {
        self.holonomy == 0 && self.translation.is_zero()
    }

    pub fn is_pure_translation(&self) -> bool {
        self.holonomy == 0
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, g{})", self.translation, self.holonomy)
    }
}

/// `(a1, g1)(a2, g2) = (a1 + g1 a2, g1 g2)`.
pub fn affine_mul(p: &AffineElement, q: &AffineElement, group: &HolonomyGroup) -> AffineElement {
    let moved = group.element(p.holonomy).mul_rat_vec(&q.translation);
    AffineElement {
        translation: &p.translation + &moved,
        holonomy: group.mul(p.holonomy, q.holonomy),
    }
}

/// `(a, g)^{-1} = (-g^{-1} a, g^{-1})`.
pub fn affine_inv(p: &AffineElement, group: &HolonomyGroup) -> AffineElement {
    let inv = group.inverse(p.holonomy);
    let moved = group.element(inv).mul_rat_vec(&p.translation);
    AffineElement { translation: -&moved, holonomy: inv }
}

/// `p^k` for any integer `k`.
pub fn affine_pow(p: &AffineElement, k: i64, group: &HolonomyGroup) -> AffineElement {
    let base = if k < 0 { affine_inv(p, group) } else { p.clone() };
    let mut acc = AffineElement::identity(p.translation.dim());
    for _ in 0..k.unsigned_abs() {
        acc = affine_mul(&acc, &base, group);
    }
    acc
}
