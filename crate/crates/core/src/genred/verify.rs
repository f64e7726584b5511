use std::collections::VecDeque;

use crate::crystal::{AffineElement, CrystalGroup};
use crate::error::{Error, Result};
use crate::genred::report::{GenSetReport, Method};
use crate::linalg::{IntVector, Lattice};

/// Outcome of [`verify_generates`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub generates: bool,
    /// Size of the holonomy image of the set.
    pub holonomy_reached: usize,
    /// Rank of the lattice spanned by the Schreier translations.
    pub translation_rank: usize,
    /// True when those translations span all of `Z^n`.
    pub translations_full: bool,
}

/// Decides whether `set` generates the whole group.
///
/// A transversal `t_h` is built by breadth-first search over words in `set`;
/// the set generates iff the holonomy images reach every element and the
/// Schreier translations `t_h s t_{h p(s)}^{-1}` span `Z^n`.
pub fn verify_generates(group: &CrystalGroup, set: &[AffineElement]) -> Result<Verification> {
    if !group.is_normalized() {
        return Err(Error::NotNormalized);
    }
    for (index, s) in set.iter().enumerate() {
        if s.holonomy >= group.holonomy().order() {
            return Err(Error::NotASubset { index, reason: format!("holonomy index {} out of range", s.holonomy) });
        }
        if s.translation.dim() != group.dim() {
            return Err(Error::NotASubset { index, reason: "translation has the wrong dimension".into() });
        }
        if !group.contains(s) {
            return Err(Error::NotASubset { index, reason: "translation is not in the lift coset".into() });
        }
    }
    let hol = group.holonomy();
    let n = group.dim();
    let mut transversal: Vec<Option<AffineElement>> = vec![None; hol.order()];
    transversal[0] = Some(AffineElement::identity(n));
    let mut order = vec![0usize];
    let mut queue = VecDeque::from([0usize]);
    while let Some(h) = queue.pop_front() {
        for s in set {
            let next = hol.mul(h, s.holonomy);
            if transversal[next].is_none() {
                let t = group.mul(transversal[h].as_ref().expect("visited"), s);
                transversal[next] = Some(t);
                order.push(next);
                queue.push_back(next);
            }
        }
    }
    let reached = order.len();
    if reached < hol.order() {
        return Ok(Verification {
            generates: false,
            holonomy_reached: reached,
            translation_rank: 0,
            translations_full: false,
        });
    }
    let inverses: Vec<AffineElement> = transversal
        .iter()
        .map(|t| group.inv(t.as_ref().expect("all reached")))
        .collect();
    let mut vectors: Vec<IntVector> = Vec::new();
    for &h in &order {
        let th = transversal[h].as_ref().expect("reached");
        for s in set {
            let next = hol.mul(h, s.holonomy);
            let w = group.mul(&group.mul(th, s), &inverses[next]);
            debug_assert_eq!(w.holonomy, 0);
            if w.translation.is_zero() {
                continue;
            }
            let v = w
                .translation
                .to_integral()
                .ok_or_else(|| Error::InternalContradiction("non-integral translation in a normalized group".into()))?;
            vectors.push(v);
        }
    }
    let lattice = Lattice::from_generators(n, &vectors);
    let full = lattice.is_full();
    Ok(Verification {
        generates: full,
        holonomy_reached: reached,
        translation_rank: lattice.rank(),
        translations_full: full,
    })
}

/// Convenience wrapper returning only the verdict.
pub fn generates(group: &CrystalGroup, set: &[AffineElement]) -> Result<bool> {
    Ok(verify_generates(group, set)?.generates)
}

/// `{ι(e_1), ..., ι(e_n)}` followed by the lift of each holonomy generator.
pub fn naive_generating_set(group: &CrystalGroup) -> Result<GenSetReport> {
    let n = group.dim();
    let mut gens: Vec<AffineElement> = (0..n).map(|i| AffineElement::lattice_unit(n, i)).collect();
    gens.extend((0..group.lifts().len()).map(|s| group.generator_lift(s)));
    let bound = n + group.lifts().len();
    GenSetReport::verified(group, gens, Method::Naive, Some(bound), Vec::new())
}
