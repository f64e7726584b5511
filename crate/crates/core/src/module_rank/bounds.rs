use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{matrix_order, IntMatrix, IntVector, MatrixOrder};

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Generator bound for a faithful `C_p`-lattice: `n - p + a` with `a = 2`
/// for `p <= 19` and `a = 3` otherwise.
pub fn bound_prime(p: u64, n: usize) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if (n as u64) + 1 < p {
        return Err(Error::NoFaithfulAction { p, n });
    }
    let a = if p <= 19 { 2 } else { 3 };
    Ok(n + a - p as usize)
}

/// Generator bound for a faithful `C_m`-lattice, `m >= 3`: `n - 3` when `m`
/// has a prime factor above 3, else `n - 1`. `None` for `m < 3`. Whether a
/// faithful action exists in dimension `n` is not checked.
pub fn bound_cyclic(m: u64, n: usize) -> Option<usize> {
    if m < 3 {
        return None;
    }
    let large_prime = factorize(m).iter().any(|&(p, _)| p > 3);
    Some(if large_prime { n.saturating_sub(3) } else { n.saturating_sub(1) })
}

/// Module generators read off a block upper-triangular matrix.
///
/// `blocks` lists the diagonal block sizes. Every 2x2 diagonal block of
/// order 4 contributes one vector `v` with `det(v, Bv) = ±1` (so `v`
/// generates the block); every other block contributes its coordinate
/// vectors. The result generates `Z^n` because each block generates its
/// quotient in the flag of leading coordinate subspaces.
pub fn c4_block_reduce(m: &IntMatrix, blocks: &[usize]) -> Result<Vec<IntVector>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if blocks.iter().sum::<usize>() != n || blocks.contains(&0) {
        return Err(Error::InvalidBlocks(format!("block sizes {blocks:?} do not partition {n}")));
    }
    let mut starts = Vec::with_capacity(blocks.len());
    let mut offset = 0;
    for &b in blocks {
        starts.push(offset);
        offset += b;
    }
    for (bi, (&s, &b)) in starts.iter().zip(blocks).enumerate() {
        for i in s..s + b {
            for j in 0..s {
                if m[(i, j)] != BigInt::from(0) {
                    return Err(Error::InvalidBlocks(format!("entry ({i},{j}) below diagonal block {bi} is non-zero")));
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut found = false;
    for (&s, &b) in starts.iter().zip(blocks) {
        let block = m.submatrix(s, s + b, s, s + b);
        let order4 = b == 2 && block.is_unimodular() && matrix_order(&block)? == MatrixOrder::Finite(4);
        let embed = |local: &[BigInt]| -> IntVector {
            let mut v = vec![BigInt::from(0); n];
            v[s..s + b].clone_from_slice(local);
            v
        };
        if order4 {
            let y = cyclic_vector_2x2(&block)
                .ok_or_else(|| Error::InternalContradiction("order-four block without a cyclic vector".into()))?;
            out.push(embed(&y));
            found = true;
        } else {
            for k in 0..b {
                let mut local = vec![BigInt::from(0); b];
                local[k] = BigInt::from(1);
                out.push(embed(&local));
            }
        }
    }
    if !found {
        return Err(Error::NoOrderFourBlock);
    }
    Ok(out)
}

/// Some `v` with `|det(v, Bv)| = 1`, searching outward from `(0, 1)`.
fn cyclic_vector_2x2(b: &IntMatrix) -> Option<IntVector> {
    let ok = |x: i64, y: i64| {
        let v = vec![BigInt::from(x), BigInt::from(y)];
        let w = b.mul_vec(&v);
        let det = &v[0] * &w[1] - &v[1] * &w[0];
        (det == BigInt::from(1) || det == BigInt::from(-1)).then_some(v)
    };
    if let Some(v) = ok(0, 1) {
        return Some(v);
    }
    for r in 1..=64i64 {
        for x in -r..=r {
            for y in -r..=r {
                if x.abs().max(y.abs()) == r {
                    if let Some(v) = ok(x, y) {
                        return Some(v);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::DEFAULT_CAP;
    use crate::linalg::int_vector;
    use crate::module_rank::module::{zg_span_is_full, GModule};

    #[test]
    fn prime_bound_values() {
        assert_eq!(bound_prime(5, 4).unwrap(), 1);
        assert_eq!(bound_prime(23, 22).unwrap(), 2);
        assert_eq!(bound_prime(23, 24).unwrap(), 4);
        assert_eq!(bound_prime(3, 2).unwrap(), 1);
        assert_eq!(bound_prime(19, 18).unwrap(), 1);
        assert!(matches!(bound_prime(7, 5), Err(Error::NoFaithfulAction { p: 7, n: 5 })));
        assert!(matches!(bound_prime(9, 10), Err(Error::NotPrime(9))));
    }

    #[test]
    fn cyclic_bound_values() {
        assert_eq!(bound_cyclic(5, 5), Some(2));
        assert_eq!(bound_cyclic(4, 2), Some(1));
        assert_eq!(bound_cyclic(12, 6), Some(5));
        assert_eq!(bound_cyclic(2, 6), None);
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(35), vec![(5, 1), (7, 1)]);
    }

    #[test]
    fn single_rotation_block() {
        let j = IntMatrix::from_rows(&[[0, 1], [-1, 0]]);
        assert_eq!(c4_block_reduce(&j, &[2]).unwrap(), vec![int_vector(&[0, 1])]);
    }

    #[test]
    fn rotation_plus_trivial() {
        let m = IntMatrix::from_rows(&[[0, 1, 0], [-1, 0, 0], [0, 0, 1]]);
        let gens = c4_block_reduce(&m, &[2, 1]).unwrap();
        assert_eq!(gens, vec![int_vector(&[0, 1, 0]), int_vector(&[0, 0, 1])]);
        assert!(zg_span_is_full(&gens, &GModule::cyclic(&m, DEFAULT_CAP).unwrap()));
    }

    #[test]
    fn two_rotation_blocks() {
        let j = IntMatrix::from_rows(&[[0, 1], [-1, 0]]);
        let m = IntMatrix::block_diag(&[j.clone(), j]);
        let gens = c4_block_reduce(&m, &[2, 2]).unwrap();
        assert_eq!(gens.len(), 2);
        assert!(zg_span_is_full(&gens, &GModule::cyclic(&m, DEFAULT_CAP).unwrap()));
    }

    #[test]
    fn errors() {
        let m = IntMatrix::diagonal(&[-1, 1]);
        assert!(matches!(c4_block_reduce(&m, &[1, 1]), Err(Error::NoOrderFourBlock)));
        assert!(matches!(c4_block_reduce(&m, &[1]), Err(Error::InvalidBlocks(_))));
        let lower = IntMatrix::from_rows(&[[0, 1, 0], [-1, 0, 0], [1, 0, 1]]);
        assert!(matches!(c4_block_reduce(&lower, &[2, 1]), Err(Error::InvalidBlocks(_))));
    }
}
