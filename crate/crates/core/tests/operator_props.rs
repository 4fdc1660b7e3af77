use std::sync::LazyLock;

use lihull::group::Rational;
use lihull::hull::{HullWord, InverseHull};
use lihull::operator::{hull_matrix, word_operator, SparseMatrix, TruncatedOperator};
use lihull::semigroup::{Semigroup, SemigroupElement};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = SparseMatrix> {
    proptest::collection::vec((0..rows, 0..cols, -4i128..5, 1i128..4), 0..12).prop_map(move |es| {
        let mut m = SparseMatrix::zeros(rows, cols);
        for (i, j, n, d) in es {
            m.set(i, j, Rational::new(n, d));
        }
        m
    })
}

static BACKENDS: LazyLock<Vec<Semigroup>> = LazyLock::new(|| {
    vec![
        Semigroup::free_monoid(2),
        Semigroup::naturals(),
        Semigroup::positive_cone(2),
        Semigroup::numerical(&[2, 3]).unwrap(),
        Semigroup::ax_plus_b(),
    ]
});

/// Words over the letter pool of backend `b`, as index pairs.
fn word_indices() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (0..5usize, proptest::collection::vec((0..8usize, 0..8usize), 1..4))
}

fn build_word(sg: &Semigroup, pairs: &[(usize, usize)]) -> HullWord {
    let pool = InverseHull::new(sg).letter_pool();
    let pick = |i: usize| -> SemigroupElement { pool[i % pool.len()].clone() };
    HullWord::new(pairs.iter().map(|&(t, s)| (pick(t), pick(s))).collect()).unwrap()
}

proptest! {
    #[test]
    fn product_transposes(a in matrix(4, 5), b in matrix(5, 3)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()).unwrap());
    }

    #[test]
    fn product_associates(a in matrix(3, 4), b in matrix(4, 4), c in matrix(4, 2)) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn text_export_round_trips(a in matrix(6, 7)) {
        prop_assert_eq!(SparseMatrix::parse(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn diagonal_part_is_idempotent(a in matrix(5, 5)) {
        let d = a.diagonal_part();
        prop_assert_eq!(d.diagonal_part(), d.clone());
        prop_assert!(d.entries().all(|(i, j, _)| i == j));
        prop_assert_eq!(a.add(&d.scale(-Rational::from_integer(1))).unwrap().diagonal_part().nnz(), 0);
    }

    #[test]
    fn adjoint_swaps_cores(a in matrix(4, 4)) {
        let t = TruncatedOperator::new(a, [0, 1].into(), [2, 3].into());
        let s = t.adjoint();
        prop_assert_eq!(s.row_core(), t.col_core());
        prop_assert_eq!(s.col_core(), t.row_core());
        prop_assert_eq!(s.adjoint(), t);
    }

    #[test]
    fn inverse_semigroup_laws((b, p) in word_indices(), (_, q) in word_indices()) {
        let sg = &BACKENDS[b];
        let h = InverseHull::new(sg);
        let f = h.evaluate_word(&build_word(sg, &p)).unwrap();
        let g = h.evaluate_word(&build_word(sg, &q)).unwrap();
        let fs = h.star(&f);
        prop_assert_eq!(h.compose(&f, &h.compose(&fs, &f).unwrap()).unwrap(), f.clone());
        prop_assert_eq!(h.star(&h.compose(&f, &g).unwrap()), h.compose(&h.star(&g), &fs).unwrap());
        let e1 = h.compose(&f, &fs).unwrap();
        let e2 = h.compose(&g, &h.star(&g)).unwrap();
        prop_assert_eq!(h.compose(&e1, &e2).unwrap(), h.compose(&e2, &e1).unwrap());
    }

    #[test]
    fn word_operator_matches_hull_matrix((b, p) in word_indices()) {
        let sg = &BACKENDS[b];
        let h = InverseHull::new(sg);
        let w = sg.window_of_size(25);
        let word = build_word(sg, &p);
        let f = h.evaluate_word(&word).unwrap();
        let product = word_operator(sg, &word, &w).unwrap();
        prop_assert!(product.agrees_on_core(&hull_matrix(&h, &f, &w)).is_ok());
    }
}
