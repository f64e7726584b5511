use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::matrix::{IntMatrix, IntVector};

/// Parses a rational written as `"p/q"` or `"p"`.
///
/// With `strict`, the fraction must already be reduced with `q >= 1`.
pub fn parse_rational(text: &str, strict: bool) -> Result<BigRational, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| format!("bad numerator in {text:?}"))?;
    let den = BigInt::from_str(den).map_err(|_| format!("bad denominator in {text:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    if strict {
        if den.is_negative() {
            return Err(format!("denominator must be positive in {text:?}"));
        }
        if !num.gcd(&den).is_one() {
            return Err(format!("fraction {text:?} is not reduced"));
        }
    }
    Ok(BigRational::new(num, den))
}

/// Renders a rational as `"p/q"`, or `"p"` when integral.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Vector of rationals. `BigRational` keeps every coordinate reduced with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatVector(Vec<BigRational>);

impl RatVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![BigRational::zero(); n])
    }

    pub fn from_ints(v: &[BigInt]) -> Self {
        Self(v.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn from_i64(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    /// `(n1, d1, n2, d2, ...)` shorthand for tests and corpus construction.
    pub fn from_fractions(pairs: &[(i64, i64)]) -> Self {
        Self(
            pairs
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = BigRational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigRational> {
        self.0.iter()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|q| q.is_integer())
    }

    pub fn to_integral(&self) -> Option<IntVector> {
        self.0
            .iter()
            .map(|q| q.is_integer().then(|| q.to_integer()))
            .collect()
    }

    /// Least common multiple of the denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
    }

    pub fn floor(&self) -> IntVector {
        self.0.iter().map(|q| q.floor().to_integer()).collect()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self(self.0.iter().map(|q| q * k).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl Index<usize> for RatVector {
    type Output = BigRational;

    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

impl Add for &RatVector {
    type Output = RatVector;

    fn add(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.dim(), rhs.dim());
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVector {
    type Output = RatVector;

    fn sub(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.dim(), rhs.dim());
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVector {
    type Output = RatVector;

    fn neg(self) -> RatVector {
        RatVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatVector{}", self)
    }
}

/// Dense rational matrix, used for non-unimodular changes of basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn from_int(m: &IntMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|e| BigRational::from_integer(e.clone())).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_int(&IntMatrix::identity(n))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut entries = vec![BigRational::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    entries[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        RatMatrix { rows: self.rows, cols: rhs.cols, entries }
    }

    pub fn mul_vec(&self, v: &RatVector) -> RatVector {
        assert_eq!(self.cols, v.dim());
        RatVector::new(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
                .collect(),
        )
    }

    /// Gauss-Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = self.entries[i * n..(i + 1) * n].to_vec();
                row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero())?;
            a.swap(c, p);
            let pivot = a[c][c].clone();
            for x in a[c].iter_mut() {
                *x /= &pivot;
            }
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    for j in 0..2 * n {
                        let v = &a[c][j] * &f;
                        a[r][j] -= v;
                    }
                }
            }
        }
        Some(RatMatrix {
            rows: n,
            cols: n,
            entries: a.into_iter().flat_map(|row| row.into_iter().skip(n)).collect(),
        })
    }

    /// Integer matrix, if every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        let entries: Option<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|q| q.is_integer().then(|| q.to_integer()))
            .collect();
        entries.map(|e| IntMatrix::new(self.rows, self.cols, e))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn max_abs_denominator(&self) -> BigInt {
        self.entries.iter().map(|q| q.denom().abs()).max().unwrap_or_else(BigInt::one)
    }
}
