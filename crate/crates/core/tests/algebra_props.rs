use adjoint_core::algebra::laurent::{c, v};
use adjoint_core::algebra::{rat, series_expand, LaurentPoly, RingMatrix, TruncatedSeries};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2), 0..4).prop_map(|terms| {
        terms.into_iter().fold(LaurentPoly::zero(), |acc, (k, ea, eb)| {
            acc + LaurentPoly::monomial(rat(k), &[("a", ea), ("b", eb)])
        })
    })
}

fn poly_matrix(n: usize) -> impl Strategy<Value = RingMatrix<LaurentPoly>> {
    prop::collection::vec(small_poly(), n * n).prop_map(move |e| RingMatrix::from_fn(n, n, |i, j| e[n * i + j].clone()))
}

fn nonneg_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, 0i32..=2, -1i32..=1), 0..4).prop_map(|terms| {
        terms.into_iter().fold(LaurentPoly::zero(), |acc, (k, ex, eq)| {
            acc + LaurentPoly::monomial(rat(k), &[("X", ex), ("q", eq)])
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn distributive(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!((&p + &q) * &r, &p * &r + &q * &r);
        prop_assert_eq!(&p * (&q * &r), (&p * &q) * &r);
    }

    #[test]
    fn series_times_denominator(num in nonneg_poly(), tail in nonneg_poly()) {
        // denominators with constant term 1 in X
        let den = c(1) + &tail * v("X");
        let s = series_expand(&num, &den, &["X"], 6).unwrap();
        let back = s.mul(&TruncatedSeries::from_poly(&den, &["X"], 6).unwrap());
        prop_assert_eq!(back, TruncatedSeries::from_poly(&num, &["X"], 6).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn det_multiplicative_3(a in poly_matrix(3), b in poly_matrix(3)) {
        prop_assert_eq!(a.mul(&b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn det_multiplicative_4(a in poly_matrix(4), b in poly_matrix(4)) {
        prop_assert_eq!(a.mul(&b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn charpoly_of_block_diagonal(a in poly_matrix(2), b in poly_matrix(2)) {
        let whole = a.direct_sum(&b).charpoly("t").unwrap();
        prop_assert_eq!(whole, a.charpoly("t").unwrap() * b.charpoly("t").unwrap());
    }
}

#[test]
fn det_examples() {
    assert_eq!(RingMatrix::<LaurentPoly>::identity(8).det().unwrap(), c(1));
    let (a, b, rho) = (v("a"), v("b"), v("rho"));
    let m = RingMatrix::from_fn(2, 2, |i, j| match (i, j) {
        (0, 0) | (1, 1) => a.clone(),
        (0, 1) => b.clone(),
        _ => &b * &rho,
    });
    assert_eq!(m.det().unwrap(), &a * &a - &b * &b * &rho);
    let mu = v("mu");
    let d = RingMatrix::diagonal(&[mu.clone(), mu.pow(-1).unwrap()]);
    let t = v("t");
    assert_eq!(d.charpoly("t").unwrap(), &t * &t - (&mu + mu.pow(-1).unwrap()) * &t + c(1));
}
