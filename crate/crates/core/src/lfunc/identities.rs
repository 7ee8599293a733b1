//! Power-series identities behind the unramified computation, each checked
//! against a brute-force expansion.

use crate::algebra::laurent::{c, v};
use crate::algebra::{rat, series_expand, LaurentPoly, TruncatedSeries};
use crate::error::{Error, Result};
use crate::errata;
use crate::reps::{schur_char, schur_expand, sym_power_char};
use crate::report::VerificationReport;

pub const BIG_X: &str = "X";
pub const T1: &str = "T1";
pub const T2: &str = "T2";
pub const T: &str = "T";

/// Largest degree the Sym^k oracle accepts.
pub const POINCARE_MAX_DEGREE: u32 = 10;

fn mono(powers: &[(&str, i64)]) -> LaurentPoly {
    let p: Vec<(&str, i32)> = powers.iter().map(|&(n, e)| (n, e as i32)).collect();
    LaurentPoly::monomial(rat(1), &p)
}

/// `1 + X + ... + X^n`, i.e. `(1 - X^{n+1})/(1 - X)` for `n ≥ 0`.
pub fn geometric(var: &str, n: i64) -> LaurentPoly {
    (0..=n).fold(LaurentPoly::zero(), |acc, i| acc + mono(&[(var, i)]))
}

fn first_diff(a: &TruncatedSeries, b: &TruncatedSeries) -> Option<String> {
    a.first_difference(b).map(|d| d.to_string())
}

/// `(1 - T1³T2³X⁶) / ((1-T1T2X)(1-T1T2X²)(1-T1³X³)(1-T2³X³))`.
pub fn split_closed_form() -> (LaurentPoly, LaurentPoly) {
    let num = c(1) - mono(&[(T1, 3), (T2, 3), (BIG_X, 6)]);
    let den = (c(1) - mono(&[(T1, 1), (T2, 1), (BIG_X, 1)]))
        * (c(1) - mono(&[(T1, 1), (T2, 1), (BIG_X, 2)]))
        * (c(1) - mono(&[(T1, 3), (BIG_X, 3)]))
        * (c(1) - mono(&[(T2, 3), (BIG_X, 3)]));
    (num, den)
}

/// The split closed form divided further by `(1-X²)(1-X³)`.
pub fn poincare_closed_form() -> (LaurentPoly, LaurentPoly) {
    let (num, den) = split_closed_form();
    let x = v(BIG_X);
    (num, den * (c(1) - x.pow(2).expect("pow")) * (c(1) - x.pow(3).expect("pow")))
}

/// `Σ_k X^k Σ_{(m1,m2)} mult_{m1,m2}(Sym^k adjoint) T1^{m1} T2^{m2}` up to
/// `X^bound`, with `X` the only series variable.
pub fn poincare_oracle(bound: u32) -> Result<TruncatedSeries> {
    if bound > POINCARE_MAX_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "Poincaré oracle degree {bound} exceeds {POINCARE_MAX_DEGREE}"
        )));
    }
    let adjoint = schur_char(1, 1)?;
    let mut total = LaurentPoly::zero();
    for k in 0..=bound as i64 {
        let dec = schur_expand(&sym_power_char(&adjoint, k)?)?;
        for ((m1, m2), mult) in dec {
            total = total + mono(&[(BIG_X, k), (T1, m1), (T2, m2)]).scale(&rat(mult));
        }
    }
    TruncatedSeries::from_poly(&total, &[BIG_X], bound)
}

pub fn poincare_check(bound: u32) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("poincare");
    rep.param("degree", bound);
    let oracle = poincare_oracle(bound)?;
    let (num, den) = poincare_closed_form();
    let closed = series_expand(&num, &den, &[BIG_X], bound)?;
    rep.check(
        "sym-oracle-vs-closed-form",
        oracle == closed,
        format!("Sym^k(adjoint) highest-weight multiplicities for k <= {bound} ({} coefficients)", oracle.num_coefficients()),
        || first_diff(&oracle, &closed),
    );
    Ok(rep)
}

/// `Σ_{m1,m2 ≥ 0, 3 | m1-m2} (1 + ... + X^{min}) X^{max} T1^{m1} T2^{m2}`
/// truncated at total degree `bound` in X, T1, T2.
pub fn split_lattice_sum(bound: u32) -> Result<TruncatedSeries> {
    let b = bound as i64;
    let mut total = LaurentPoly::zero();
    for m1 in 0..=b {
        for m2 in 0..=(b - m1) {
            if (m1 - m2) % 3 != 0 || m1.max(m2) + m1 + m2 > b {
                continue;
            }
            let term = geometric(BIG_X, m1.min(m2)) * mono(&[(BIG_X, m1.max(m2)), (T1, m1), (T2, m2)]);
            total = total + term;
        }
    }
    TruncatedSeries::from_poly(&total, &[BIG_X, T1, T2], bound)
}

pub fn split_identity_check(bound: u32) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("split-identity");
    rep.param("degree", bound);
    let lhs = split_lattice_sum(bound)?;
    let (num, den) = split_closed_form();
    let rhs = series_expand(&num, &den, &[BIG_X, T1, T2], bound)?;
    rep.check(
        "lattice-sum-vs-closed-form",
        lhs == rhs,
        format!("agreement to total degree {bound} in X, T1, T2 ({} coefficients)", rhs.num_coefficients()),
        || first_diff(&lhs, &rhs),
    );
    Ok(rep)
}

/// `Σ_{k1,k2} Σ_{i ≤ min(k1,k2)} X^{k1+2k2} T^{k1+k2-2i}`.
pub fn nonsplit_double_sum(bound: u32) -> Result<TruncatedSeries> {
    let b = bound as i64;
    let mut total = LaurentPoly::zero();
    for k1 in 0..=b {
        for k2 in 0..=b {
            if k1 + 2 * k2 > b {
                break;
            }
            for i in 0..=k1.min(k2) {
                total = total + mono(&[(BIG_X, k1 + 2 * k2), (T, k1 + k2 - 2 * i)]);
            }
        }
    }
    TruncatedSeries::from_poly(&total, &[BIG_X, T], bound)
}

/// `(1/(1-X³)) Σ_m X^m (1 + ... + X^m) T^m`.
pub fn nonsplit_single_sum(bound: u32) -> Result<TruncatedSeries> {
    let mut total = LaurentPoly::zero();
    for m in 0..=bound as i64 {
        total = total + geometric(BIG_X, m) * mono(&[(BIG_X, m), (T, m)]);
    }
    let x3 = c(1) - mono(&[(BIG_X, 3)]);
    series_expand(&total, &x3, &[BIG_X, T], bound)
}

pub fn nonsplit_identity_check(bound: u32) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("nonsplit-identity");
    rep.param("degree", bound);
    let vars = [BIG_X, T];
    let left = nonsplit_double_sum(bound)?;
    let den = (c(1) - mono(&[(BIG_X, 3)])) * (c(1) - mono(&[(T, 1), (BIG_X, 1)])) * (c(1) - mono(&[(T, 1), (BIG_X, 2)]));
    let middle = series_expand(&c(1), &den, &vars, bound)?;
    let right = nonsplit_single_sum(bound)?;
    rep.check("double-sum-vs-product", left == middle, format!("to total degree {bound}"), || {
        first_diff(&left, &middle)
    });
    rep.check("product-vs-single-sum", middle == right, format!("to total degree {bound}"), || {
        first_diff(&middle, &right)
    });
    rep.typo(errata::capital_m());
    Ok(rep)
}

/// The three identity suites merged.
pub fn verify_identities(bound: u32) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("identities");
    rep.param("degree", bound);
    let pd = bound.min(POINCARE_MAX_DEGREE);
    rep.param("poincare_degree", pd);
    rep.absorb(poincare_check(pd)?);
    rep.absorb(split_identity_check(bound)?);
    rep.absorb(nonsplit_identity_check(bound)?);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_low_terms() {
        let (num, den) = split_closed_form();
        let s = series_expand(&num, &den, &[BIG_X, T1, T2], 2).unwrap();
        assert_eq!(s.to_poly(), c(1));
        let s = series_expand(&num, &den, &[BIG_X], 2).unwrap();
        let t = v(T1) * v(T2);
        assert_eq!(s.coefficient(&[(BIG_X, 1)]), t);
    }

    #[test]
    fn poincare_low_terms() {
        let s = poincare_oracle(2).unwrap();
        let t = v(T1) * v(T2);
        assert_eq!(s.coefficient(&[]), c(1));
        assert_eq!(s.coefficient(&[(BIG_X, 1)]), t);
        assert_eq!(s.coefficient(&[(BIG_X, 2)]), &t * &t + &t + c(1));
        let (num, den) = poincare_closed_form();
        let e = series_expand(&num, &den, &[BIG_X], 2).unwrap();
        assert_eq!(e, s);
        assert!(poincare_oracle(11).is_err());
    }

    #[test]
    fn small_degree_identities() {
        assert!(split_identity_check(6).unwrap().passed());
        assert!(nonsplit_identity_check(6).unwrap().passed());
        assert!(poincare_check(4).unwrap().passed());
    }

    #[test]
    fn t1t2x_coefficient() {
        let s = split_lattice_sum(3).unwrap();
        assert_eq!(s.coefficient(&[(BIG_X, 1), (T1, 1), (T2, 1)]), c(1));
        let n = nonsplit_double_sum(3).unwrap();
        assert_eq!(n.coefficient(&[(BIG_X, 1), (T, 1)]), c(1));
    }
}
