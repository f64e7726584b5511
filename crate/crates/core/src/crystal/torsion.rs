use crate::crystal::affine::AffineElement;
use crate::crystal::group::CrystalGroup;
use crate::error::{Error, Result};
use crate::linalg::{solve_integer, IntMatrix, RatVector};

/// Outcome of [`is_torsion_free`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionVerdict {
    pub torsion_free: bool,
    /// First finite-order non-identity element found, in holonomy table order.
    pub witness: Option<AffineElement>,
}

/// `I + M + ... + M^{k-1}`.
pub fn norm_matrix(m: &IntMatrix, k: u64) -> IntMatrix {
    let n = m.rows();
    let mut acc = IntMatrix::zeros(n, n);
    let mut power = IntMatrix::identity(n);
    for _ in 0..k {
        acc = &acc + &power;
        power = &power * m;
    }
    acc
}

/// Decides torsion-freeness coset by coset.
///
/// `(a_g + λ, g)^k = (N_g (a_g + λ), I)` with `k` the order of `g`, so the
/// coset of `g` has torsion iff `N_g λ = -N_g a_g` has an integral solution.
pub fn is_torsion_free(group: &CrystalGroup) -> Result<TorsionVerdict> {
    if !group.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let hol = group.holonomy();
    for g in 1..hol.order() {
        let m = hol.element(g);
        let norm = norm_matrix(m, hol.element_order(g));
        let a = group.lift_table().get(g);
        let Some(na) = norm.mul_rat_vec(a).to_integral() else {
            continue;
        };
        let rhs: Vec<_> = na.iter().map(|x| -x).collect();
        if let Some(lambda) = solve_integer(&norm, &rhs) {
            let witness = AffineElement::new(a + &RatVector::from_ints(&lambda), g);
            return Ok(TorsionVerdict { torsion_free: false, witness: Some(witness) });
        }
    }
    Ok(TorsionVerdict { torsion_free: true, witness: None })
}
