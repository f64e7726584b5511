use crate::crystal::{is_torsion_free, AffineElement, CrystalGroup, HolonomyGroup};
use crate::error::{Error, Result};
use crate::genred::cyclic::{reduce_cyclic, ReduceOptions};
use crate::genred::greedy::greedy_reduce;
use crate::genred::report::{GenSetReport, Method};
use crate::genred::verify::{generates, naive_generating_set};

/// Largest holonomy order for which generating pairs are searched exhaustively.
const PAIR_SEARCH_LIMIT: usize = 256;

/// A pair of holonomy elements generating the whole group: the input
/// generators when there are at most two, otherwise the first pair in table
/// order. `None` when the group needs three or more generators.
pub fn generating_pair(hol: &HolonomyGroup) -> Option<(usize, usize)> {
    let order = hol.order();
    let gens: Vec<usize> = (0..hol.generators().len()).map(|s| hol.generator_index(s)).collect();
    match gens.as_slice() {
        [] => return Some((0, 0)),
        [x] => return Some((*x, 0)),
        [x, y] => return Some((*x, *y)),
        _ => {}
    }
    if order > PAIR_SEARCH_LIMIT {
        return None;
    }
    for i in 0..order {
        for j in i..order {
            if hol.closure(&[i, j]).len() == order {
                return Some((i, j));
            }
        }
    }
    None
}

fn with_method(group: &CrystalGroup, r: GenSetReport, method: Method, bound: Option<usize>, extra: &str) -> Result<GenSetReport> {
    let mut notes = vec![extra.to_string()];
    notes.extend(r.notes);
    GenSetReport::verified(group, r.generators, method, bound, notes)
}

/// Generating set for a torsion-free group whose holonomy is generated by
/// `x` and `y` (holonomy table indices), following the case split on the
/// orders of `x`, `y` and `xy`.
pub fn reduce_two_generated(group: &CrystalGroup, x: usize, y: usize, opts: ReduceOptions) -> Result<GenSetReport> {
    if !group.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let hol = group.holonomy();
    if x >= hol.order() || y >= hol.order() || hol.closure(&[x, y]).len() != hol.order() {
        return Err(Error::NotAGeneratingPair);
    }
    if let Some(w) = is_torsion_free(group)?.witness {
        return Err(Error::InputNotTorsionFree(Box::new(w)));
    }
    let n = group.dim();
    let bound = Some(n);
    let (a, b) = (hol.element_order(x), hol.element_order(y));
    let m = hol.order();

    let fallback = |note: &str| -> Result<GenSetReport> {
        let naive = naive_generating_set(group)?;
        let r = greedy_reduce(group, &naive.generators)?;
        with_method(group, r, Method::Greedy, bound, note)
    };

    if a == 1 || b == 1 {
        if m >= 3 {
            let r = reduce_cyclic(group, opts)?;
            return with_method(group, r, Method::TheoremC, bound, "cyclic holonomy");
        }
        return fallback("holonomy of order at most 2");
    }
    let (x, y) = if a >= b { (x, y) } else { (y, x) };
    let (alpha, beta) = (group.lift(x), group.lift(y));
    let (cyclic_part, note) = if a.max(b) >= 3 {
        (alpha, "subgroup generated by the lattice and the lift of order >= 3")
    } else if hol.element_order(hol.mul(x, y)) >= 3 {
        (group.mul(&alpha, &beta), "subgroup generated by the lattice and alpha*beta")
    } else {
        return fallback("holonomy C2 x C2");
    };
    let sub = group.subgroup_with_lattice(&[cyclic_part])?;
    let r = reduce_cyclic(&sub, opts)?;
    let mut gens: Vec<AffineElement> = r.generators.iter().map(|e| group.embed_from(&sub, e)).collect();
    gens.push(beta);
    let mut notes = vec![note.to_string()];
    notes.extend(r.notes);
    if generates(group, &gens)? {
        return GenSetReport::verified(group, gens, Method::TheoremC, bound, notes);
    }
    notes.push("two-generated set failed verification".into());
    let mut start = gens;
    start.extend(naive_generating_set(group)?.generators);
    let reduced = greedy_reduce(group, &start)?;
    GenSetReport::verified(group, reduced.generators, Method::Greedy, bound, notes)
}
