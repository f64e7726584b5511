//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use flatgroup::cli::corpus::corpus;
use flatgroup::cli::LoadedGroup;
use flatgroup::crystal::{CrystalGroup, DEFAULT_CAP};
use flatgroup::linalg::order::{companion_matrix, cyclotomic};
use flatgroup::linalg::{IntMatrix, IntVector, RatVector};
use flatgroup::module_rank::GModule;
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn loaded_corpus() -> Vec<LoadedGroup> {
    corpus().into_iter().map(|f| f.load(DEFAULT_CAP).expect("corpus loads")).collect()
}

fn to_i64_matrix(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_i64_rows().expect("small entries")
}

/// Points tried per holonomy element by [`brute_force_has_torsion`].
pub const TORSION_BOX_LIMIT: usize = 40_000;

/// Torsion by enumeration: for every non-identity holonomy element `g` and
/// every `λ` in a centred box of side `|G| * max denominator` (shrunk so the
/// box has at most [`TORSION_BOX_LIMIT`] points), raise `(a_g + λ, g)` to the
/// `|G|`-th power by repeated affine multiplication and compare with the
/// identity. Arithmetic is done on integers scaled by the common denominator.
pub fn brute_force_has_torsion(group: &CrystalGroup) -> bool {
    let hol = group.holonomy();
    let n = group.dim();
    let order = hol.order();
    let mut den = BigInt::one();
    for g in 0..order {
        den = den.lcm(&group.lift(g).translation.common_denominator());
    }
    let d = den.to_i64().expect("small denominator");
    let side = order as i64 * d;
    let mut radius = side / 2;
    while radius > 0 && ((2 * radius + 1) as f64).powi(n as i32) > TORSION_BOX_LIMIT as f64 {
        radius -= 1;
    }
    for g in 1..order {
        let m = to_i64_matrix(hol.element(g));
        let a: Vec<i64> = group
            .lift(g)
            .translation
            .iter()
            .map(|q| (q * BigRational::from_integer(den.clone())).to_integer().to_i64().unwrap().rem_euclid(d))
            .collect();
        for lambda in (0..n).map(|_| -radius..=radius).multi_cartesian_product() {
            let t: Vec<i64> = a.iter().zip(&lambda).map(|(x, l)| x + l * d).collect();
            // (t, M)^k = (t + M t + ... + M^{k-1} t, M^k)
            let mut acc = vec![0i64; n];
            let mut cur = t.clone();
            for _ in 0..order {
                for i in 0..n {
                    acc[i] += cur[i];
                }
                cur = (0..n).map(|i| (0..n).map(|j| m[i][j] * cur[j]).sum()).collect();
            }
            if acc.iter().all(|&x| x == 0) {
                return true;
            }
        }
    }
    false
}

/// `true` when the integer span of `vectors` is all of `Z^n`, by incremental
/// gcd row echelon over `i128`.
pub fn spans_integer_lattice(vectors: &[Vec<i64>], n: usize) -> bool {
    let mut rows: Vec<Option<Vec<i128>>> = vec![None; n];
    for v in vectors {
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for p in 0..n {
            if v[p] == 0 {
                continue;
            }
            match rows[p].take() {
                None => {
                    rows[p] = Some(v);
                    break;
                }
                Some(mut r) => {
                    // gcd step on the pivot column, keeping both rows
                    while v[p] != 0 {
                        let q = r[p] / v[p];
                        for k in 0..n {
                            r[k] -= q * v[k];
                        }
                        std::mem::swap(&mut r, &mut v);
                    }
                    rows[p] = Some(r);
                }
            }
        }
    }
    rows.iter().enumerate().all(|(p, r)| r.as_ref().is_some_and(|r| r[p].abs() == 1))
}

/// Orbit-lattice span test: all `g v` for `g` in the group and `v` in the set.
pub fn oracle_span_is_full(set: &[IntVector], module: &GModule) -> bool {
    let n = module.dim();
    let mats: Vec<Vec<Vec<i64>>> = module.elements().iter().map(to_i64_matrix).collect();
    let mut vectors = Vec::new();
    for v in set {
        let v: Vec<i64> = v.iter().map(|x| x.to_i64().unwrap()).collect();
        for m in &mats {
            vectors.push((0..n).map(|i| (0..n).map(|j| m[i][j] * v[j]).sum()).collect());
        }
    }
    spans_integer_lattice(&vectors, n)
}

/// Smallest subset of `pool` whose orbit lattice is `Z^n`.
pub fn oracle_min_rank(pool: &[IntVector], module: &GModule) -> Option<usize> {
    (1..=module.dim()).find(|&k| pool.iter().cloned().combinations(k).any(|s| oracle_span_is_full(&s, module)))
}

/// Regular permutation action of `C_d` (cyclic shift on `d` coordinates).
pub fn shift_matrix(d: usize) -> IntMatrix {
    let mut rows = vec![vec![0i64; d]; d];
    for i in 0..d {
        rows[(i + 1) % d][i] = 1;
    }
    IntMatrix::from_rows(&rows)
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m % d == 0).collect()
}

/// A faithful `C_m` action on `Z^n` (`n <= max_dim`) built from cyclotomic
/// companion blocks, cyclic shift blocks and trivial blocks, with the block
/// orders' lcm equal to `m`.
pub fn random_cyclic_module(m: u64, max_dim: usize, rng: &mut ChaCha8Rng) -> IntMatrix {
    loop {
        let mut blocks: Vec<(IntMatrix, u64)> = Vec::new();
        let mut dim = 0;
        let target = rng.gen_range(1..=max_dim);
        let mut attempts = 0;
        while dim < target && attempts < 20 {
            attempts += 1;
            let d = *divisors(m).iter().nth(rng.gen_range(0..divisors(m).len())).unwrap();
            let block = match rng.gen_range(0..3) {
                0 => companion_matrix(&cyclotomic(d)),
                1 => shift_matrix(d as usize),
                _ => IntMatrix::identity(1),
            };
            let order = if block.rows() == 1 && block.is_identity() { 1 } else { d };
            if dim + block.rows() <= max_dim {
                dim += block.rows();
                blocks.push((block, order));
            }
        }
        let lcm = blocks.iter().fold(1u64, |acc, (_, o)| acc.lcm(o));
        if lcm == m && dim >= 1 {
            let mats: Vec<IntMatrix> = blocks.into_iter().map(|(b, _)| b).collect();
            return IntMatrix::block_diag(&mats);
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random vector with coordinates `p/q`, `q` drawn from `dens`.
pub fn random_rat_vector(n: usize, dens: &[i64], rng: &mut ChaCha8Rng) -> RatVector {
    let pairs: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let q = dens[rng.gen_range(0..dens.len())];
            (rng.gen_range(0..q), q)
        })
        .collect();
    RatVector::from_fractions(&pairs)
}

pub fn random_int_vector(n: usize, r: i64, rng: &mut ChaCha8Rng) -> IntVector {
    (0..n).map(|_| BigInt::from(rng.gen_range(-r..=r))).collect()
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}
