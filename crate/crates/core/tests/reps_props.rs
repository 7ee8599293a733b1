use std::collections::BTreeMap;

use adjoint_core::algebra::{rat, LaurentPoly, Rational, RingMatrix};
use adjoint_core::g2model::other_transpose;
use adjoint_core::reps::{is_weyl_invariant, r_fr, r_fr_coset, r_matrix, schur_char, schur_expand};
use proptest::prelude::*;

fn invertible3() -> impl Strategy<Value = RingMatrix<Rational>> {
    prop::collection::vec(-4i64..=4, 9)
        .prop_map(|e| RingMatrix::from_fn(3, 3, |i, j| rat(e[3 * i + j])))
        .prop_filter("singular", |m| m.det().map(|d| d != rat(0)).unwrap_or(false))
}

#[test]
fn schur_characters_are_weyl_invariant() {
    for m1 in 0..=4 {
        for m2 in 0..=4 {
            assert!(is_weyl_invariant(&schur_char(m1, m2).unwrap()).unwrap(), "({m1},{m2})");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn r_is_a_homomorphism(g in invertible3(), h in invertible3()) {
        let lhs = r_matrix(&g).unwrap().mul(&r_matrix(&h).unwrap());
        prop_assert_eq!(lhs, r_matrix(&g.mul(&h)).unwrap());
    }

    #[test]
    fn semidirect_group_law(g in invertible3(), h in invertible3()) {
        let lhs = r_fr_coset(&g).unwrap().mul(&r_fr_coset(&h).unwrap());
        let th_inv = other_transpose(&h.inverse().unwrap());
        prop_assert_eq!(lhs, r_matrix(&g.mul(&th_inv)).unwrap());
    }

    #[test]
    fn fr_conjugation(g in invertible3()) {
        let f = r_fr::<Rational>();
        let lhs = f.mul(&r_matrix(&g).unwrap()).mul(&f);
        prop_assert_eq!(lhs, r_matrix(&other_transpose(&g.inverse().unwrap())).unwrap());
    }

    #[test]
    fn schur_expand_round_trip(mults in prop::collection::btree_map((0i64..=3, 0i64..=3), 1i64..=3, 0..5)) {
        let ch = mults.iter().fold(LaurentPoly::zero(), |acc, (&(a, b), &m)| {
            acc + schur_char(a, b).unwrap().scale(&rat(m))
        });
        let back = if ch.is_zero() { BTreeMap::new() } else { schur_expand(&ch).unwrap() };
        prop_assert_eq!(back, mults);
    }
}
