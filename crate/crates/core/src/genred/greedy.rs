use crate::crystal::{AffineElement, CrystalGroup};
use crate::error::{Error, Result};
use crate::genred::report::{GenSetReport, Method};
use crate::genred::verify::generates;

/// Longest merge word tried by [`greedy_reduce`].
const MAX_WORD: usize = 3;

/// Letters: 0 = s, 1 = s^-1, 2 = t, 3 = t^-1.
fn merge_words() -> Vec<Vec<u8>> {
    let mut words: Vec<Vec<u8>> = vec![vec![]];
    let mut out = Vec::new();
    for _ in 0..MAX_WORD {
        let mut next = Vec::new();
        for w in &words {
            for letter in 0..4u8 {
                if w.last().is_some_and(|&l| l ^ 1 == letter) {
                    continue;
                }
                let mut v = w.clone();
                v.push(letter);
                next.push(v);
            }
        }
        out.extend(next.iter().filter(|w| w.iter().any(|&l| l < 2) && w.iter().any(|&l| l >= 2)).cloned());
        words = next;
    }
    out
}

fn evaluate(group: &CrystalGroup, word: &[u8], s: &AffineElement, t: &AffineElement) -> AffineElement {
    let s_inv = group.inv(s);
    let t_inv = group.inv(t);
    word.iter().fold(AffineElement::identity(group.dim()), |acc, &l| {
        let x = match l {
            0 => s,
            1 => &s_inv,
            2 => t,
            _ => &t_inv,
        };
        group.mul(&acc, x)
    })
}

/// Shrinks a generating set by single removals, then by replacing a pair
/// `{s, t}` with one word of length at most 3 in `s`, `t` and their inverses.
/// Every step is re-verified; the scan order is fixed.
pub fn greedy_reduce(group: &CrystalGroup, set: &[AffineElement]) -> Result<GenSetReport> {
    if !generates(group, set)? {
        return Err(Error::InternalContradiction("greedy reduction needs a generating set".into()));
    }
    let words = merge_words();
    let mut current = set.to_vec();
    loop {
        let mut i = 0;
        while i < current.len() {
            let mut trial = current.clone();
            trial.remove(i);
            if generates(group, &trial)? {
                current = trial;
            } else {
                i += 1;
            }
        }
        if !try_merge(group, &mut current, &words)? {
            break;
        }
    }
    GenSetReport::verified(group, current, Method::Greedy, Some(set.len()), Vec::new())
}

fn try_merge(group: &CrystalGroup, current: &mut Vec<AffineElement>, words: &[Vec<u8>]) -> Result<bool> {
    for i in 0..current.len() {
        for j in i + 1..current.len() {
            for w in words {
                let merged = evaluate(group, w, &current[i], &current[j]);
                let mut trial = current.clone();
                trial[i] = merged;
                trial.remove(j);
                if generates(group, &trial)? {
                    *current = trial;
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::DEFAULT_CAP;
    use crate::genred::verify::naive_generating_set;
    use crate::linalg::{IntMatrix, RatVector};

    #[test]
    fn word_list() {
        let words = merge_words();
        assert_eq!(words.iter().filter(|w| w.len() == 2).count(), 8);
        assert!(words.iter().all(|w| w.windows(2).all(|p| p[0] ^ 1 != p[1])));
    }

    #[test]
    fn klein_bottle_shrinks_to_two() {
        let g = CrystalGroup::from_generators(
            None,
            2,
            &[IntMatrix::diagonal(&[1, -1])],
            vec![RatVector::from_fractions(&[(1, 2), (0, 1)])],
            DEFAULT_CAP,
        )
        .unwrap();
        let naive = naive_generating_set(&g).unwrap();
        let r = greedy_reduce(&g, &naive.generators).unwrap();
        assert_eq!(r.size, 2);
        assert_eq!(r.generators, vec![AffineElement::lattice_unit(2, 1), g.generator_lift(0)]);
    }

    #[test]
    fn torus_stays() {
        let g = CrystalGroup::from_generators(None, 3, &[], vec![], DEFAULT_CAP).unwrap();
        let naive = naive_generating_set(&g).unwrap();
        let r = greedy_reduce(&g, &naive.generators).unwrap();
        assert_eq!(r.size, 3);
    }
}
