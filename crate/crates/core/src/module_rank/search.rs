use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::crystal::fixed_lattice;
use crate::linalg::{IntMatrix, IntVector, Lattice};
use crate::module_rank::bounds::{bound_cyclic, bound_prime, is_prime};
use crate::module_rank::module::{coinvariant_lower_bound, GModule};

/// Default number of span checks for [`rank_upper_search`].
pub const DEFAULT_BUDGET: u64 = 100_000;

/// Coefficient range for pool combinations.
const POOL_COEFF: i64 = 2;
/// Largest support of a pool combination.
const POOL_SUPPORT: usize = 3;

/// Which closed-form bound applies to a module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FormulaKind {
    /// `n - p + a` for a cyclic group of prime order.
    Prime,
    /// `n - 3` or `n - 1` for a cyclic group of order at least 3.
    Cyclic,
}

impl FormulaKind {
    pub fn tag(self) -> &'static str {
        match self {
            FormulaKind::Prime => "prime",
            FormulaKind::Cyclic => "cyclic",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaBound {
    pub value: usize,
    pub kind: FormulaKind,
}

/// Lower and upper bounds on the module generator rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankBounds {
    pub lower: usize,
    pub upper: usize,
    /// A generating set of size `upper`.
    pub witness: Vec<IntVector>,
    pub formula_bound: Option<FormulaBound>,
    /// The budget ran out before every smaller subset of the pool was tried.
    pub budget_exhausted: bool,
    /// `upper` is larger than the applicable formula bound.
    pub exceeds_formula: bool,
    pub checks: u64,
}

impl RankBounds {
    /// True when `lower == upper`, i.e. the rank is known exactly.
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Smallest closed-form bound that applies to the acting group.
pub fn formula_bound(module: &GModule) -> Option<FormulaBound> {
    let m = module.cyclic_order()? as u64;
    let n = module.dim();
    let mut best: Option<FormulaBound> = None;
    if is_prime(m) {
        if let Ok(value) = bound_prime(m, n) {
            best = Some(FormulaBound { value, kind: FormulaKind::Prime });
        }
    }
    if let Some(value) = bound_cyclic(m, n) {
        if best.is_none_or(|b| value < b.value) {
            best = Some(FormulaBound { value, kind: FormulaKind::Cyclic });
        }
    }
    best
}

/// Candidate generators: the standard basis, then a basis of the fixed
/// lattice, then primitive vectors with entries in `[-2, 2]` and support at
/// most 3 (first non-zero entry positive) in seeded random order. Only the
/// first vector of each `±G`-orbit is kept.
pub fn default_pool(module: &GModule, seed: u64) -> Vec<IntVector> {
    let n = module.dim();
    let mut head: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    let fixed = fixed_lattice(module.generators(), n);
    head.extend(fixed.basis_vectors().into_iter().filter_map(|v| to_i64(&v)));

    let mut tail = Vec::new();
    for support in 2..=POOL_SUPPORT.min(n) {
        for positions in (0..n).combinations(support) {
            let choices = (0..support).map(|_| (-POOL_COEFF..=POOL_COEFF).filter(|&c| c != 0));
            for coeffs in choices.multi_cartesian_product() {
                if coeffs[0] < 0 || coeffs.iter().fold(0i64, |g, c| g.gcd(c)) != 1 {
                    continue;
                }
                let mut v = vec![0i64; n];
                for (&p, &c) in positions.iter().zip(&coeffs) {
                    v[p] = c;
                }
                tail.push(v);
            }
        }
    }
    tail.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let mut seen = BTreeSet::new();
    let mut pool = Vec::new();
    for v in head.into_iter().chain(tail) {
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        if seen.insert(orbit_key(module, &v)) {
            pool.push(v.iter().map(|&x| BigInt::from(x)).collect());
        }
    }
    pool
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| i64::from(i == j)).collect()
}

fn to_i64(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|x| i64::try_from(x).ok()).collect()
}

/// Lexicographically least element of the `±G`-orbit.
fn orbit_key(module: &GModule, v: &[i64]) -> Vec<BigInt> {
    let big: IntVector = v.iter().map(|&x| BigInt::from(x)).collect();
    module
        .elements()
        .iter()
        .flat_map(|g| {
            let w = g.mul_vec(&big);
            let neg: IntVector = w.iter().map(|x| -x).collect();
            [w, neg]
        })
        .min()
        .expect("group has an identity")
}

/// Looks for a small generating set inside `pool`.
///
/// A greedy pass (add each pool vector that enlarges the span, then drop
/// redundant ones) gives a first witness; then all subsets of each size from
/// the lower bound upward are tried in lexicographic pool order until a
/// success or the greedy size is reached. Every span check counts against
/// `budget`. The standard basis is used if the pool does not generate.
pub fn rank_upper_search(module: &GModule, pool: &[IntVector], budget: u64) -> RankBounds {
    let n = module.dim();
    let lower = coinvariant_lower_bound(module).max(usize::from(n > 0));
    let formula = formula_bound(module);
    let mut pool: Vec<IntVector> = pool.to_vec();
    let orbit_bases: Vec<IntMatrix> = pool.iter().map(|v| module.orbit_lattice(v).basis().clone()).collect();
    let mut orbit_bases = orbit_bases;
    let mut checks = 0u64;

    let span_of = |bases: &[IntMatrix], idx: &[usize]| -> Lattice {
        let stacked = idx.iter().fold(IntMatrix::zeros(n, 0), |acc, &i| acc.hstack(&bases[i]));
        Lattice::from_generator_matrix(&stacked)
    };

    let mut chosen: Vec<usize> = Vec::new();
    let mut span = Lattice::zero(n);
    for (i, basis) in orbit_bases.iter().enumerate() {
        if span.is_full() {
            break;
        }
        let next = Lattice::from_generator_matrix(&span.basis().hstack(basis));
        checks += 1;
        if next != span {
            chosen.push(i);
            span = next;
        }
    }
    if !span.is_full() {
        for i in 0..n {
            let e: IntVector = unit(n, i).into_iter().map(BigInt::from).collect();
            orbit_bases.push(module.orbit_lattice(&e).basis().clone());
            pool.push(e);
            chosen.push(pool.len() - 1);
        }
    }
    let mut k = 0;
    while k < chosen.len() {
        let mut trial = chosen.clone();
        trial.remove(k);
        checks += 1;
        if span_of(&orbit_bases, &trial).is_full() {
            chosen = trial;
        } else {
            k += 1;
        }
    }

    let mut best = chosen;
    let mut exhausted = false;
    let mut size = lower;
    'sizes: while size < best.len() {
        for combo in (0..pool.len()).combinations(size) {
            if checks >= budget {
                exhausted = true;
                break 'sizes;
            }
            checks += 1;
            if span_of(&orbit_bases, &combo).is_full() {
                best = combo;
                break 'sizes;
            }
        }
        size += 1;
    }

    let upper = best.len();
    RankBounds {
        lower: lower.min(upper),
        upper,
        witness: best.iter().map(|&i| pool[i].clone()).collect(),
        formula_bound: formula,
        budget_exhausted: exhausted,
        exceeds_formula: formula.is_some_and(|f| upper > f.value),
        checks,
    }
}
