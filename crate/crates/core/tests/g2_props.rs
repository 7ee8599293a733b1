use adjoint_core::algebra::{rat_frac, Rational, Ring};
use adjoint_core::g2model::forms::j_defect;
use adjoint_core::g2model::{one_param, Root, TrilinearForm};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn root_subgroups_preserve_j_and_t(idx in 0usize..12, n in -20i64..=20, d in 1i64..=7) {
        let root = Root::all()[idx];
        let g = one_param(root, &rat_frac(n, d));
        prop_assert!(j_defect(&g, Rational::is_zero).is_none());
        prop_assert!(TrilinearForm::standard().preservation_defect(&g, Rational::is_zero).is_none());
    }

    #[test]
    fn one_param_is_additive(idx in 0usize..12, a in -9i64..=9, b in -9i64..=9) {
        let root = Root::all()[idx];
        let (s, t) = (rat_frac(a, 2), rat_frac(b, 3));
        prop_assert_eq!(one_param(root, &s).mul(&one_param(root, &t)), one_param(root, &(s + t)));
    }
}
