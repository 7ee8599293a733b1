//! Local L-factors `det(1 - x·r(t))^{-1}` of unramified Satake classes.

use super::X;
use crate::algebra::laurent::{c, v};
use crate::algebra::{series_expand, LaurentPoly, RingMatrix, TruncatedSeries};
use crate::error::Result;
use crate::reps::characters::alpha3;
use crate::reps::{fr_eigensplit, r_fr, SatakeClass, ALPHA1, ALPHA2, MU};
use crate::report::VerificationReport;
use crate::{errata, reps};

/// `det(1 - x·R)` for an 8x8 matrix `R`.
pub fn det_one_minus_x(r: &RingMatrix<LaurentPoly>) -> Result<LaurentPoly> {
    let x = v(X);
    RingMatrix::identity(r.rows()).sub(&r.scale(&x)).det()
}

/// The reciprocal `det(1 - x·r(t̃))` of the L-factor.
pub fn l_factor_denominator(class: &SatakeClass) -> Result<LaurentPoly> {
    det_one_minus_x(&class.r_matrix()?)
}

/// The same for the twisted representation `r'`.
pub fn l_factor_denominator_prime(class: &SatakeClass) -> Result<LaurentPoly> {
    det_one_minus_x(&class.r_prime_matrix()?)
}

pub fn local_l_factor(class: &SatakeClass, bound: u32) -> Result<TruncatedSeries> {
    series_expand(&c(1), &l_factor_denominator(class)?, &[X], bound)
}

pub fn local_l_factor_prime(class: &SatakeClass, bound: u32) -> Result<TruncatedSeries> {
    series_expand(&c(1), &l_factor_denominator_prime(class)?, &[X], bound)
}

/// `(1-μ²x)(1-μ²x²)(1-x²)(1-μ^{-2}x)(1-μ^{-2}x²)`.
pub fn nonsplit_displayed_denominator(mu: &LaurentPoly) -> Result<LaurentPoly> {
    let x = v(X);
    let x2 = &x * &x;
    let m2 = mu.pow(2)?;
    let m2i = mu.pow(-2)?;
    Ok((c(1) - &m2 * &x) * (c(1) - &m2 * &x2) * (c(1) - &x2) * (c(1) - &m2i * &x) * (c(1) - &m2i * &x2))
}

/// Product of `(1 - λx)` over the adjoint weights `αi/αj` (i≠j) and `1, 1`.
fn split_weight_product(a: [LaurentPoly; 3]) -> Result<LaurentPoly> {
    let x = v(X);
    let mut out = (c(1) - &x) * (c(1) - &x);
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                out = out * (c(1) - &a[i] * a[j].inv()? * &x);
            }
        }
    }
    Ok(out)
}

fn x_to_minus_x(p: &LaurentPoly) -> Result<LaurentPoly> {
    p.substitute(&[(X, -v(X))])
}

/// The L-factor suite: split and non-split determinant forms, the Fr
/// eigenspace decomposition and the Frobenius conjugation rule.
pub fn verify_lfactor(split: bool, nonsplit: bool) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("lfactor");
    let case = match (split, nonsplit) {
        (true, true) => "both",
        (true, false) => "split",
        _ => "nonsplit",
    };
    rep.param("case", case);
    rep.typo(errata::traceless_dimension());
    rep.typo(errata::satake_group());

    let names = ["g11", "g12", "g13", "g21", "g22", "g23", "g31", "g32", "g33"];
    let g = RingMatrix::from_fn(3, 3, |i, j| v(names[3 * i + j]));
    let adj = g.adjugate()?;
    let f = r_fr::<LaurentPoly>();
    let lhs = f.mul(&reps::conjugation_matrix(&g, &adj)?).mul(&f);
    let rhs = reps::conjugation_matrix(
        &crate::g2model::other_transpose(&adj),
        &crate::g2model::other_transpose(&g),
    )?;
    rep.check(
        "fr-conjugation",
        lhs == rhs,
        "r(Fr) r(g) r(Fr) = r(_t g^-1) for a generic 3x3 g (both sides scaled by det g)",
        || lhs.first_difference(&rhs).map(|d| format!("entry ({},{}): {} vs {}", d.row, d.col, d.left, d.right)),
    );

    if split {
        let class = SatakeClass::split_symbolic();
        let det = l_factor_denominator(&class)?;
        let a = [v(ALPHA1), v(ALPHA2), alpha3()];
        let expected = split_weight_product(a.clone())?;
        rep.check(
            "split-det-weights",
            det == expected,
            "det(1 - x r(g)) = (1-x)^2 prod_{i!=j} (1 - x alpha_i/alpha_j)",
            || Some(format!("{det} vs {expected}")),
        );
        let permuted = det.substitute(&[(ALPHA1, v(ALPHA2)), (ALPHA2, alpha3())])?;
        let inverted = det.substitute(&[(ALPHA1, v(ALPHA1).inv()?), (ALPHA2, v(ALPHA2).inv()?)])?;
        rep.check(
            "split-self-dual",
            permuted == det && inverted == det,
            "the L-factor is stable under permuting and inverting the alphas",
            || Some("charpoly changed under a Weyl or duality substitution".into()),
        );
        let trivial = local_l_factor(&SatakeClass::split_trivial(), 6)?;
        let expected = series_expand(&c(1), &(c(1) - v(X)).pow(8)?, &[X], 6)?;
        rep.check(
            "split-trivial",
            trivial == expected,
            "trivial split class gives (1-x)^-8",
            || trivial.first_difference(&expected).map(|d| d.to_string()),
        );
    }

    if nonsplit {
        let mu = v(MU);
        let class = SatakeClass::nonsplit_symbolic();
        let det = l_factor_denominator(&class)?;
        let shown = nonsplit_displayed_denominator(&mu)?;
        rep.check(
            "nonsplit-det-vs-product",
            det == shown,
            "det(1 - x r(g) r(Fr)) equals the five-factor product identically in mu",
            || Some(format!("{det} vs {shown}")),
        );
        let (plus, minus) = fr_eigensplit(&mu)?;
        let pw = |k: i32| mu.pow(k);
        let want_plus = vec![pw(2)?, pw(1)?, pw(0)?, pw(-1)?, pw(-2)?];
        let want_minus = vec![pw(1)?, pw(0)?, pw(-1)?];
        let show = |xs: &[LaurentPoly]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        rep.check(
            "fr-eigenspaces",
            plus == want_plus && minus == want_minus,
            format!("+1: [{}] (dim {}), -1: [{}] (dim {})", show(&plus), plus.len(), show(&minus), minus.len()),
            || Some(format!("expected +1: [{}], -1: [{}]", show(&want_plus), show(&want_minus))),
        );
        rep.typo(errata::duplicated_eigenspace());
        let twisted = l_factor_denominator_prime(&class)?;
        let flipped = x_to_minus_x(&det)?;
        rep.check(
            "r-prime-twist",
            twisted == flipped,
            "det(1 - x r'(t)) = det(1 + x r(t)) on the Fr coset",
            || Some(format!("{twisted} vs {flipped}")),
        );
        let trivial = local_l_factor(&SatakeClass::nonsplit_trivial(), 8)?;
        let x = v(X);
        let den = (c(1) - &x).pow(2)? * (c(1) - &x * &x).pow(3)?;
        let expected = series_expand(&c(1), &den, &[X], 8)?;
        rep.check(
            "nonsplit-trivial",
            trivial == expected,
            "mu = 1 gives 1/((1-x)^2 (1-x^2)^3)",
            || trivial.first_difference(&expected).map(|d| d.to_string()),
        );
    }
    Ok(rep)
}
