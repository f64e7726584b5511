//! Finite-order detection for integer matrices.
//!
//! `M` has finite order iff its characteristic polynomial is a product of
//! cyclotomic polynomials `Φ_d` and the square-free product of those `Φ_d`
//! annihilates `M`. The order is then the lcm of the `d`s that occur.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::matrix::IntMatrix;

/// Outcome of [`matrix_order`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixOrder {
    Finite(u64),
    Infinite,
}

impl MatrixOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            MatrixOrder::Finite(k) => Some(k),
            MatrixOrder::Infinite => None,
        }
    }
}

/// Integer polynomial, coefficients from the constant term upwards.
pub type Poly = Vec<BigInt>;

fn trim(p: &mut Poly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Exact division by a monic polynomial; `None` when the remainder is non-zero.
fn div_exact_monic(p: &Poly, d: &Poly) -> Option<Poly> {
    let mut rem = p.clone();
    trim(&mut rem);
    let dd = d.len() - 1;
    if rem.len() < d.len() {
        return rem.iter().all(Zero::is_zero).then(|| vec![BigInt::zero()]);
    }
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, di) in d.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        q[k] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(q)
}

pub fn euler_phi(mut d: u64) -> u64 {
    let mut result = d;
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            while d % p == 0 {
                d /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if d > 1 {
        result -= result / d;
    }
    result
}

/// The `d`-th cyclotomic polynomial.
pub fn cyclotomic(d: u64) -> Poly {
    assert!(d >= 1);
    cyclotomics_up_to(d).pop().expect("non-empty")
}

/// `[Φ_1, ..., Φ_max]`.
pub fn cyclotomics_up_to(max: u64) -> Vec<Poly> {
    let mut table: Vec<Poly> = Vec::with_capacity(max as usize);
    for d in 1..=max {
        let mut p: Poly = vec![BigInt::zero(); d as usize + 1];
        p[0] = -BigInt::one();
        p[d as usize] = BigInt::one();
        for e in 1..d {
            if d % e == 0 {
                p = div_exact_monic(&p, &table[e as usize - 1])
                    .expect("cyclotomic factors divide x^d - 1");
            }
        }
        trim(&mut p);
        table.push(p);
    }
    table
}

/// Characteristic polynomial `det(xI - M)` (Faddeev-LeVerrier, exact).
pub fn characteristic_polynomial(m: &IntMatrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = IntMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m * &mk;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = m * &mk;
        let trace: BigInt = (0..n).map(|i| am[(i, i)].clone()).sum();
        coeffs[n - k] = -(trace / BigInt::from(k));
    }
    Ok(coeffs)
}

fn eval_at_matrix(p: &Poly, m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    let mut acc = IntMatrix::zeros(n, n);
    for c in p.iter().rev() {
        acc = &acc * m;
        for i in 0..n {
            acc[(i, i)] += c;
        }
    }
    acc
}

/// Least `k >= 1` with `M^k = I`, or [`MatrixOrder::Infinite`].
pub fn matrix_order(m: &IntMatrix) -> Result<MatrixOrder> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if !m.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let n = m.rows() as u64;
    if n == 0 {
        return Ok(MatrixOrder::Finite(1));
    }
    let mut rest = characteristic_polynomial(m)?;
    let mut present = Vec::new();
    // phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2n^2
    let table = cyclotomics_up_to(2 * n * n + 2);
    for d in 1..=2 * n * n + 2 {
        if euler_phi(d) > (rest.len() as u64 - 1) {
            continue;
        }
        let phi = &table[d as usize - 1];
        let mut hit = false;
        while let Some(q) = div_exact_monic(&rest, phi) {
            rest = q;
            hit = true;
            if rest.len() == 1 {
                break;
            }
        }
        if hit {
            present.push(d);
        }
        if rest.len() == 1 {
            break;
        }
    }
    if rest.len() != 1 || !rest[0].is_one() {
        return Ok(MatrixOrder::Infinite);
    }
    let squarefree = present
        .iter()
        .fold(vec![BigInt::one()], |acc, &d| poly_mul(&acc, &table[d as usize - 1]));
    if !eval_at_matrix(&squarefree, m).is_zero() {
        return Ok(MatrixOrder::Infinite);
    }
    Ok(MatrixOrder::Finite(present.iter().fold(1u64, |acc, &d| acc.lcm(&d))))
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Companion matrix of a monic polynomial (ones on the subdiagonal, last
/// column `-c_0, ..., -c_{k-1}`). `e_1` is a cyclic vector.
pub fn companion_matrix(p: &Poly) -> IntMatrix {
    let k = p.len() - 1;
    let mut m = IntMatrix::zeros(k, k);
    for i in 1..k {
        m[(i, i - 1)] = BigInt::one();
    }
    for i in 0..k {
        m[(i, k - 1)] = -p[i].clone();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        let as_i64 = |p: Poly| -> Vec<i64> { p.iter().map(|c| c.try_into().unwrap()).collect() };
        assert_eq!(as_i64(cyclotomic(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn orders() {
        let j = IntMatrix::from_rows(&[[0, 1], [-1, 0]]);
        assert_eq!(matrix_order(&j).unwrap(), MatrixOrder::Finite(4));
        let shear = IntMatrix::from_rows(&[[1, 1], [0, 1]]);
        assert_eq!(matrix_order(&shear).unwrap(), MatrixOrder::Infinite);
        assert_eq!(matrix_order(&IntMatrix::identity(3)).unwrap(), MatrixOrder::Finite(1));
        let hyperbolic = IntMatrix::from_rows(&[[2, 1], [1, 1]]);
        assert_eq!(matrix_order(&hyperbolic).unwrap(), MatrixOrder::Infinite);
        assert!(matches!(matrix_order(&IntMatrix::diagonal(&[2, 1])), Err(Error::NotUnimodular)));
        let c5 = companion_matrix(&cyclotomic(5));
        assert_eq!(matrix_order(&c5).unwrap(), MatrixOrder::Finite(5));
    }

    #[test]
    fn block_lcm() {
        let a = IntMatrix::from_rows(&[[0, -1], [1, -1]]); // order 3
        let b = IntMatrix::from_rows(&[[0, 1], [-1, 0]]); // order 4
        let d = IntMatrix::block_diag(&[a, b]);
        assert_eq!(matrix_order(&d).unwrap(), MatrixOrder::Finite(12));
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(23), 22);
    }
}
