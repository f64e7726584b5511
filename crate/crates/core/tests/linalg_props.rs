use flatgroup::linalg::{
    hnf, integer_kernel, lattice_index, matrix_order, saturate, snf, IntMatrix, Lattice, LatticeIndex, MatrixOrder,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix(max_rows: usize, max_cols: usize, r: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(rows, cols)| {
        prop::collection::vec(-r..=r, rows * cols).prop_map(move |v| IntMatrix::from_i64(rows, cols, &v))
    })
}

/// Product of elementary column operations, hence unimodular.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -3i64..=3), 0..8).prop_map(move |ops| {
        let mut rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, k) in ops {
            if i != j {
                for row in rows.iter_mut() {
                    row[j] += k * row[i];
                }
            }
        }
        IntMatrix::from_rows(&rows)
    })
}

fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = b.columns().iter().map(|c| a.mul_vec(c)).collect();
    IntMatrix::from_columns(a.rows(), &cols)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn hnf_is_a_unimodular_column_transform(m in matrix(4, 5, 6)) {
        let (h, u) = hnf(&m);
        prop_assert_eq!(&h, &mul(&m, &u.forward));
        prop_assert!(u.forward.det().unwrap().abs().is_one());
    }

    #[test]
    fn hnf_is_canonical_under_column_operations((m, u) in (1usize..=4).prop_flat_map(|n| (matrix(n, n, 5).prop_filter("square", move |m| m.rows() == n && m.cols() == n), unimodular(n)))) {
        let (h1, _) = hnf(&m);
        let (h2, _) = hnf(&mul(&m, &u));
        prop_assert_eq!(h1, h2);
    }

    #[test]
    fn snf_is_a_divisibility_chain(m in matrix(4, 4, 8)) {
        let (s, u, v) = snf(&m);
        prop_assert_eq!(&s, &mul(&mul(&u.forward, &m), &v.forward));
        prop_assert!(u.forward.is_unimodular() && v.forward.is_unimodular());
        let k = s.rows().min(s.cols());
        let diag: Vec<BigInt> = (0..k).map(|i| s.row(i)[i].clone()).collect();
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                if i != j {
                    prop_assert!(s.row(i)[j].is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in matrix(3, 5, 4)) {
        let k = integer_kernel(&m);
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
        prop_assert_eq!(k.rank() + m.rank(), m.cols());
    }

    #[test]
    fn saturation_is_idempotent_extensive_and_of_finite_index(vs in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..4)) {
        let gens: Vec<Vec<BigInt>> = vs.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let l = Lattice::from_generators(3, &gens);
        let s = saturate(&l);
        prop_assert_eq!(saturate(&s), s.clone());
        prop_assert!(s.contains_lattice(&l));
        prop_assert!(matches!(lattice_index(&l, &s).unwrap(), LatticeIndex::Finite(_)));
    }
}

#[test]
fn matrix_order_is_exact_on_finite_order_matrices() {
    let examples = [
        IntMatrix::from_rows(&[[0, -1], [1, -1]]),
        IntMatrix::from_rows(&[[1, -1], [1, 0]]),
        IntMatrix::from_rows(&[[0, -1], [1, 0]]),
        IntMatrix::from_rows(&[[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]),
        IntMatrix::block_diag(&[IntMatrix::from_rows(&[[0, -1], [1, -1]]), IntMatrix::from_rows(&[[0, -1], [1, 0]])]),
        IntMatrix::diagonal(&[1, -1, 1]),
    ];
    for m in examples {
        let k = matrix_order(&m).unwrap().finite().unwrap();
        assert!(m.pow(k).is_identity());
        for d in 1..k {
            if k % d == 0 {
                assert!(!m.pow(d).is_identity(), "order {k} but M^{d} = I");
            }
        }
    }
    let shear = IntMatrix::from_rows(&[[1, 1], [0, 1]]);
    assert_eq!(matrix_order(&shear).unwrap(), MatrixOrder::Infinite);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn matrix_order_agrees_with_powering(m in matrix(3, 3, 1).prop_filter("square unimodular", |m| m.rows() == m.cols() && m.is_unimodular())) {
        let direct = (1..=12u64).find(|&k| m.pow(k).is_identity());
        match matrix_order(&m).unwrap() {
            MatrixOrder::Finite(k) => prop_assert_eq!(Some(k), direct),
            MatrixOrder::Infinite => prop_assert_eq!(direct, None),
        }
    }
}
