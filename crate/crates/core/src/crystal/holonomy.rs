use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::{matrix_order, IntMatrix, MatrixOrder, RatMatrix};

/// Default cap on the number of enumerated holonomy elements.
pub const DEFAULT_CAP: usize = 20_000;

/// Groups up to this size keep a full multiplication table.
const FULL_TABLE_LIMIT: usize = 1024;

/// A finite subgroup of `GL_n(Z)`, fully enumerated.
///
/// Elements are numbered in breadth-first order from the identity (index 0),
/// multiplying on the right by the generators in the order given. Every
/// non-identity element records the tree edge `(parent, generator)` through
/// which it was first reached.
#[derive(Clone, Debug)]
pub struct HolonomyGroup {
    dim: usize,
    generators: Vec<IntMatrix>,
    elements: Vec<IntMatrix>,
    lookup: HashMap<IntMatrix, usize>,
    right_gen: Vec<Vec<usize>>,
    parent: Vec<Option<(usize, usize)>>,
    mul_table: Option<Vec<usize>>,
}

impl HolonomyGroup {
    /// Closure of the matrix group generated by `generators`.
    pub fn enumerate(dim: usize, generators: &[IntMatrix], cap: usize) -> Result<Self> {
        for g in generators {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.rows().max(g.cols()) });
            }
            if !g.is_unimodular() {
                return Err(Error::NotUnimodular);
            }
            if matrix_order(g)? == MatrixOrder::Infinite {
                return Err(Error::InfiniteOrExceedsCap(cap));
            }
        }
        let identity = IntMatrix::identity(dim);
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::from([(identity, 0usize)]);
        let mut parent = vec![None];
        let mut right_gen: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let mut row = Vec::with_capacity(generators.len());
            for (s, g) in generators.iter().enumerate() {
                let prod = &elements[i] * g;
                let idx = match lookup.get(&prod) {
                    Some(&idx) => idx,
                    None => {
                        let idx = elements.len();
                        if idx >= cap {
                            return Err(Error::InfiniteOrExceedsCap(cap));
                        }
                        lookup.insert(prod.clone(), idx);
                        elements.push(prod);
                        parent.push(Some((i, s)));
                        queue.push_back(idx);
                        idx
                    }
                };
                row.push(idx);
            }
            right_gen.push(row);
        }
        let mut group = Self {
            dim,
            generators: generators.to_vec(),
            elements,
            lookup,
            right_gen,
            parent,
            mul_table: None,
        };
        group.build_table();
        Ok(group)
    }

    fn build_table(&mut self) {
        let n = self.elements.len();
        if n > FULL_TABLE_LIMIT {
            return;
        }
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = &self.elements[i] * &self.elements[j];
                table[i * n + j] = self.lookup[&prod];
            }
        }
        self.mul_table = Some(table);
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }

    /// Table index of generator `s`.
    pub fn generator_index(&self, s: usize) -> usize {
        self.right_gen[0][s]
    }

    pub fn element(&self, i: usize) -> &IntMatrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.lookup.get(m).copied()
    }

    /// Breadth-first tree edge `(parent, generator)` of element `i`.
    pub fn tree_parent(&self, i: usize) -> Option<(usize, usize)> {
        self.parent[i]
    }

    /// `elements[i] * generators[s]`.
    pub fn mul_generator(&self, i: usize, s: usize) -> usize {
        self.right_gen[i][s]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.mul_table {
            Some(t) => t[i * self.order() + j],
            None => {
                let prod = &self.elements[i] * &self.elements[j];
                self.lookup[&prod]
            }
        }
    }

    pub fn element_order(&self, i: usize) -> u64 {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.mul(cur, i);
            k += 1;
        }
        k
    }

    pub fn inverse(&self, i: usize) -> usize {
        let mut prev = 0;
        let mut cur = i;
        while cur != 0 {
            prev = cur;
            cur = self.mul(cur, i);
        }
        // prev * i = identity
        prev
    }

    pub fn pow(&self, i: usize, k: u64) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, i))
    }

    /// Subgroup generated by the listed elements, in discovery order.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &g in gens {
                let j = self.mul(i, g);
                if !seen[j] {
                    seen[j] = true;
                    out.push(j);
                    queue.push_back(j);
                }
            }
        }
        out
    }

    /// First element (table order) whose order equals the group order.
    pub fn cyclic_generator(&self) -> Option<usize> {
        let n = self.order() as u64;
        (0..self.order()).find(|&i| self.element_order(i) == n)
    }

    /// Conjugates every element by a rational change of basis,
    /// `M -> inverse * M * forward`. `None` if some result is not integral.
    pub fn conjugated(&self, forward: &RatMatrix, inverse: &RatMatrix) -> Option<Self> {
        let conj = |m: &IntMatrix| inverse.mul(&m.to_rat()).mul(forward).to_int();
        let elements: Option<Vec<IntMatrix>> = self.elements.iter().map(conj).collect();
        let elements = elements?;
        let generators: Option<Vec<IntMatrix>> = self.generators.iter().map(conj).collect();
        let lookup = elements.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Some(Self {
            dim: self.dim,
            generators: generators?,
            elements,
            lookup,
            right_gen: self.right_gen.clone(),
            parent: self.parent.clone(),
            mul_table: self.mul_table.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = HolonomyGroup::enumerate(2, &[IntMatrix::identity(2)], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
        let g = HolonomyGroup::enumerate(2, &[], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn rotation_of_order_four() {
        let j = IntMatrix::from_rows(&[[0, 1], [-1, 0]]);
        let g = HolonomyGroup::enumerate(2, &[j], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.cyclic_generator(), Some(1));
        assert_eq!(g.element_order(2), 2);
        let inv = g.inverse(1);
        assert_eq!(g.mul(1, inv), 0);
    }

    #[test]
    fn klein_four() {
        let a = IntMatrix::diagonal(&[1, -1]);
        let b = IntMatrix::diagonal(&[-1, 1]);
        let g = HolonomyGroup::enumerate(2, &[a, b], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.cyclic_generator(), None);
    }

    #[test]
    fn errors() {
        let shear = IntMatrix::from_rows(&[[1, 1], [0, 1]]);
        assert!(matches!(
            HolonomyGroup::enumerate(2, &[shear], DEFAULT_CAP),
            Err(Error::InfiniteOrExceedsCap(_))
        ));
        let bad = IntMatrix::diagonal(&[2, 1]);
        assert!(matches!(HolonomyGroup::enumerate(2, &[bad], DEFAULT_CAP), Err(Error::NotUnimodular)));
        let c6 = IntMatrix::from_rows(&[[0, -1], [1, 1]]);
        assert!(matches!(HolonomyGroup::enumerate(2, &[c6], 3), Err(Error::InfiniteOrExceedsCap(3))));
        // finite-order generators, infinite group
        let r1 = IntMatrix::from_rows(&[[-1, 0], [0, 1]]);
        let r2 = IntMatrix::from_rows(&[[-1, 1], [0, 1]]);
        assert!(matches!(HolonomyGroup::enumerate(2, &[r1, r2], 500), Err(Error::InfiniteOrExceedsCap(500))));
    }
}
