mod common;

use common::{brute_force_has_torsion, loaded_corpus, random_int_vector, random_rat_vector, rng};
use flatgroup::crystal::{coinvariant_split, fixed_lattice, is_torsion_free, AffineElement, CrystalGroup};
use flatgroup::linalg::{integer_kernel, IntMatrix, RatVector};
use rand::Rng;

fn random_element(g: &CrystalGroup, r: &mut rand_chacha::ChaCha8Rng) -> AffineElement {
    let h = r.gen_range(0..g.holonomy().order());
    let t = random_int_vector(g.dim(), 3, r);
    AffineElement::new(&g.lift(h).translation + &RatVector::from_ints(&t), h)
}

#[test]
fn affine_law_is_associative_with_inverses() {
    let mut r = rng(11);
    for lg in loaded_corpus() {
        let g = &lg.group;
        let id = AffineElement::identity(g.dim());
        for _ in 0..1000 {
            let (a, b, c) = (random_element(g, &mut r), random_element(g, &mut r), random_element(g, &mut r));
            assert_eq!(g.mul(&g.mul(&a, &b), &c), g.mul(&a, &g.mul(&b, &c)), "{}", lg.file.name);
            assert_eq!(g.mul(&g.inv(&a), &a), id);
            assert!(g.contains(&a));
        }
    }
}

#[test]
fn lift_table_is_a_cocycle_mod_lattice() {
    for lg in loaded_corpus() {
        let g = &lg.group;
        let hol = g.holonomy();
        for x in 0..hol.order() {
            for y in 0..hol.order() {
                let lhs = g.lift(hol.mul(x, y)).translation;
                let rhs = &g.lift(x).translation + &hol.element(x).mul_rat_vec(&g.lift(y).translation);
                assert!((&lhs - &rhs).is_integral(), "{} at ({x}, {y})", lg.file.name);
            }
        }
    }
}

#[test]
fn coinvariant_split_has_block_shape() {
    for lg in loaded_corpus() {
        let hol = lg.group.holonomy();
        for x in 0..hol.order() {
            let m = hol.element(x);
            let s = coinvariant_split(m);
            let n = m.rows();
            let k = s.tail_dim;
            assert_eq!(k, fixed_lattice(std::slice::from_ref(m), n).rank());
            assert!(s.matrix.submatrix(s.head_dim, n, 0, s.head_dim).is_zero());
            assert!(s.matrix.submatrix(s.head_dim, n, s.head_dim, n).is_identity());
            let a = s.head_block();
            let a_minus_i = IntMatrix::from_columns(
                a.rows(),
                &(0..a.cols())
                    .map(|j| {
                        let mut c = a.column(j);
                        c[j] -= 1;
                        c
                    })
                    .collect::<Vec<_>>(),
            );
            assert_eq!(integer_kernel(&a_minus_i).rank(), 0);
        }
    }
}

#[test]
fn normalization_is_idempotent_and_conjugation_stays_integral() {
    let mut r = rng(5);
    for lg in loaded_corpus() {
        let hol = lg.group.holonomy();
        let gens: Vec<IntMatrix> = hol.generators().to_vec();
        let lifts: Vec<RatVector> = gens.iter().map(|_| random_rat_vector(lg.group.dim(), &[1, 2, 3, 4], &mut r)).collect();
        let raw = CrystalGroup::from_generators(None, lg.group.dim(), &gens, lifts, hol.order() + 1).unwrap();
        let (once, _) = raw.normalize_lattice().unwrap();
        let (twice, change) = once.normalize_lattice().unwrap();
        assert!(change.is_identity());
        assert!(twice.is_normalized());
        assert!(once.holonomy().elements().iter().all(|m| m.is_unimodular()));
    }
}

#[test]
fn torsion_test_matches_brute_force_on_corpus() {
    for lg in loaded_corpus() {
        let v = is_torsion_free(&lg.group).unwrap();
        assert_eq!(!v.torsion_free, brute_force_has_torsion(&lg.group), "{}", lg.file.name);
        if let Some(w) = v.witness {
            let k = lg.group.holonomy().element_order(w.holonomy) as i64;
            assert!(lg.group.pow(&w, k).is_identity());
            assert!(!w.is_identity());
        }
    }
}

#[test]
fn cyclic_torsion_free_groups_have_fixed_vectors() {
    for lg in loaded_corpus() {
        let hol = lg.group.holonomy();
        if hol.order() > 1 && hol.cyclic_generator().is_some() && is_torsion_free(&lg.group).unwrap().torsion_free {
            assert!(fixed_lattice(hol.generators(), lg.group.dim()).rank() >= 1, "{}", lg.file.name);
        }
    }
}
