//! Hermite and Smith normal forms over the integers.
//!
//! HNF convention (used everywhere canonical equality matters): column-style,
//! computed by unimodular column operations `H = M * U`. Rows are processed
//! bottom to top; the pivot of each processed row sits in the right-most
//! still-free column, so non-zero columns are packed to the right and form an
//! upper-triangular staircase. Pivots are positive and every entry to the
//! right of a pivot (in the pivot's row) lies in `[0, pivot)`. Zero columns
//! are packed to the left.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::matrix::IntMatrix;

/// A unimodular matrix together with its exact inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularTransform {
    pub forward: IntMatrix,
    pub inverse: IntMatrix,
}

impl UnimodularTransform {
    pub fn identity(n: usize) -> Self {
        Self { forward: IntMatrix::identity(n), inverse: IntMatrix::identity(n) }
    }

    /// Wraps `forward`, computing its inverse. `None` unless unimodular.
    pub fn from_forward(forward: IntMatrix) -> Option<Self> {
        let inverse = forward.inverse_unimodular().ok()?;
        Some(Self { forward, inverse })
    }

    pub fn dim(&self) -> usize {
        self.forward.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.forward.is_identity()
    }
}

/// Extended gcd: `(g, s, t)` with `s*a + t*b = g >= 0`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let nr = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, nr);
        let ns = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, ns);
        let nt = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Column HNF without the transform; cheaper when only the span matters.
pub fn hnf_basis(m: &IntMatrix) -> IntMatrix {
    let mut h = m.clone();
    hnf_in_place(&mut h, None);
    h
}

/// Column Hermite normal form: `H = M * U.forward`.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, UnimodularTransform) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.cols());
    hnf_in_place(&mut h, Some(&mut u));
    let inverse = u.inverse_unimodular().expect("column operations are unimodular");
    (h, UnimodularTransform { forward: u, inverse })
}

fn hnf_in_place(h: &mut IntMatrix, mut u: Option<&mut IntMatrix>) {
    let rows = h.rows();
    let cols = h.cols();
    // Columns [0, free) are still unprocessed.
    let mut free = cols;
    for row in (0..rows).rev() {
        if free == 0 {
            break;
        }
        let target = free - 1;
        for j in 0..target {
            if h[(row, j)].is_zero() {
                continue;
            }
            let a = h[(row, target)].clone();
            let b = h[(row, j)].clone();
            let (g, s, t) = extended_gcd(&a, &b);
            let (ag, bg) = (&a / &g, &b / &g);
            // target' = s*target + t*j ; j' = -(b/g)*target + (a/g)*j
            let nb = -bg;
            h.combine_columns(target, j, &s, &t, &nb, &ag);
            if let Some(u) = u.as_deref_mut() {
                u.combine_columns(target, j, &s, &t, &nb, &ag);
            }
        }
        if h[(row, target)].is_zero() {
            continue;
        }
        if h[(row, target)].is_negative() {
            h.negate_column(target);
            if let Some(u) = u.as_deref_mut() {
                u.negate_column(target);
            }
        }
        let pivot = h[(row, target)].clone();
        for j in target + 1..cols {
            let q = h[(row, j)].div_floor(&pivot);
            if !q.is_zero() {
                let nq = -q;
                h.add_column_multiple(j, target, &nq);
                if let Some(u) = u.as_deref_mut() {
                    u.add_column_multiple(j, target, &nq);
                }
            }
        }
        free -= 1;
    }
}

/// Smith normal form: `S = U.forward * M * V.forward`, diagonal with
/// `d_1 | d_2 | ...` and `d_i >= 0`.
pub fn snf(m: &IntMatrix) -> (IntMatrix, UnimodularTransform, UnimodularTransform) {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let steps = rows.min(cols);
    for t in 0..steps {
        // Smallest non-zero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !s[(i, j)].is_zero()
                    && best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_columns(t, pj);
        v.swap_columns(t, pj);
        loop {
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let a = s[(t, t)].clone();
                let b = s[(i, t)].clone();
                if b.is_multiple_of(&a) {
                    let q = -(&b / &a);
                    s.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    continue;
                }
                let (g, x, y) = extended_gcd(&a, &b);
                let (ag, nbg) = (&a / &g, -(&b / &g));
                s.combine_rows(t, i, &x, &y, &nbg, &ag);
                u.combine_rows(t, i, &x, &y, &nbg, &ag);
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let a = s[(t, t)].clone();
                let b = s[(t, j)].clone();
                if b.is_multiple_of(&a) {
                    let q = -(&b / &a);
                    s.add_column_multiple(j, t, &q);
                    v.add_column_multiple(j, t, &q);
                    continue;
                }
                let (g, x, y) = extended_gcd(&a, &b);
                let (ag, nbg) = (&a / &g, -(&b / &g));
                s.combine_columns(t, j, &x, &y, &nbg, &ag);
                v.combine_columns(t, j, &x, &y, &nbg, &ag);
            }
            let column_clear = (t + 1..rows).all(|i| s[(i, t)].is_zero());
            if !column_clear {
                continue;
            }
            let pivot = s[(t, t)].clone();
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !s[(i, j)].is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    let ut = UnimodularTransform::from_forward(u).expect("row operations are unimodular");
    let vt = UnimodularTransform::from_forward(v).expect("column operations are unimodular");
    (s, ut, vt)
}

/// Diagonal of a Smith form (length `min(rows, cols)`).
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let (s, _, _) = snf(m);
    (0..m.rows().min(m.cols())).map(|i| s[(i, i)].clone()).collect()
}
