//! Characters of PGL3 and SL2 irreducibles, symmetric powers, and the
//! decomposition of a character into irreducibles.

use std::collections::BTreeMap;

use crate::algebra::laurent::v;
use crate::algebra::{rat, rat_frac, LaurentPoly, Rational};
use crate::error::{Error, Result};

pub const ALPHA1: &str = "alpha1";
pub const ALPHA2: &str = "alpha2";

/// `(α1α2)^{-1}`, the third eigenvalue.
pub fn alpha3() -> LaurentPoly {
    LaurentPoly::monomial(rat(1), &[(ALPHA1, -1), (ALPHA2, -1)])
}

fn alternant(exps: [i32; 3]) -> LaurentPoly {
    // det(x_i^{e_j})
    const PERMS: [([usize; 3], i64); 6] = [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
        ([1, 0, 2], -1),
    ];
    let mut out = LaurentPoly::zero();
    for (p, sign) in PERMS {
        out = out
            + LaurentPoly::monomial(
                rat(sign),
                &[("x1", exps[p[0]]), ("x2", exps[p[1]]), ("x3", exps[p[2]])],
            );
    }
    out
}

/// Character of the irreducible of highest weight `m1 ϖ1 + m2 ϖ2` at
/// `diag(α1, α2, (α1α2)^{-1})`, as the Schur polynomial of the partition
/// `(m1+m2, m2, 0)`.
pub fn schur_char(m1: i64, m2: i64) -> Result<LaurentPoly> {
    if m1 < 0 || m2 < 0 {
        return Err(Error::InvalidArgument(format!("negative weight ({m1},{m2})")));
    }
    let l1 = i32::try_from(m1 + m2).map_err(|_| Error::InvalidArgument("weight too large".into()))?;
    let l2 = m2 as i32;
    let num = alternant([l1 + 2, l2 + 1, 0]);
    let den = alternant([2, 1, 0]);
    let s = num.div_exact(&den)?;
    s.substitute(&[("x1", v(ALPHA1)), ("x2", v(ALPHA2)), ("x3", alpha3())])
}

/// Weyl dimension `(m1+1)(m2+1)(m1+m2+2)/2`.
pub fn weyl_dimension(m1: i64, m2: i64) -> i64 {
    (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) / 2
}

/// `z^k + z^{k-2} + ... + z^{-k}`; `z` must be a Laurent unit.
pub fn sl2_char(k: i64, z: &LaurentPoly) -> Result<LaurentPoly> {
    if k < 0 {
        return Err(Error::InvalidArgument(format!("negative highest weight {k}")));
    }
    let k = k as i32;
    let mut out = LaurentPoly::zero();
    for i in 0..=k {
        out = out + z.pow(k - 2 * i)?;
    }
    Ok(out)
}

/// Sum of coefficients, i.e. the value at α1 = α2 = 1.
pub fn dimension(ch: &LaurentPoly) -> Rational {
    ch.terms().fold(rat(0), |acc, (_, c)| acc + c)
}

/// Images of a character under the generators (12) and (13) of S3 acting on
/// the three eigenvalue slots.
fn weyl_images(ch: &LaurentPoly) -> Result<[LaurentPoly; 2]> {
    let swap12 = ch.substitute(&[(ALPHA1, v(ALPHA2)), (ALPHA2, v(ALPHA1))])?;
    let swap13 = ch.substitute(&[(ALPHA1, alpha3()), (ALPHA2, v(ALPHA2))])?;
    Ok([swap12, swap13])
}

pub fn is_weyl_invariant(ch: &LaurentPoly) -> Result<bool> {
    Ok(weyl_images(ch)?.iter().all(|w| w == ch))
}

fn check_character(ch: &LaurentPoly) -> Result<()> {
    if ch.support_vars().iter().any(|n| n != ALPHA1 && n != ALPHA2) {
        return Err(Error::NotACharacter(format!("{ch} involves variables other than α1, α2")));
    }
    if ch.terms().any(|(_, c)| !c.is_integer() || c < &rat(0)) {
        return Err(Error::NotACharacter(format!("{ch} has a coefficient outside N")));
    }
    if !is_weyl_invariant(ch)? {
        return Err(Error::NotACharacter(format!("{ch} is not Weyl invariant")));
    }
    Ok(())
}

/// Character of `Sym^k` of the representation with character `base`, via
/// `k h_k = Σ_{j=1..k} p_j h_{k-j}` with the Adams operations `p_j`.
pub fn sym_power_char(base: &LaurentPoly, k: i64) -> Result<LaurentPoly> {
    if k < 0 {
        return Err(Error::InvalidArgument(format!("negative symmetric power {k}")));
    }
    check_character(base)?;
    let mut h = vec![LaurentPoly::one()];
    let adams: Vec<LaurentPoly> = (1..=k).map(|j| base.scale_exponents(j as i32)).collect();
    for n in 1..=k as usize {
        let mut acc = LaurentPoly::zero();
        for j in 1..=n {
            acc = acc + &adams[j - 1] * &h[n - j];
        }
        h.push(acc.scale(&rat_frac(1, n as i64)));
    }
    Ok(h.pop().expect("nonempty"))
}

/// Decomposes a character into irreducibles `(m1, m2) -> multiplicity` by
/// peeling off the lexicographically highest monomial, which is always the
/// highest weight of a constituent.
pub fn schur_expand(ch: &LaurentPoly) -> Result<BTreeMap<(i64, i64), i64>> {
    check_character(ch)?;
    let mut rest = ch.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let (e1, e2, c) = rest
            .terms()
            .map(|(e, c)| (rest.exponent_in(e, ALPHA1), rest.exponent_in(e, ALPHA2), c.clone()))
            .max_by_key(|(e1, e2, _)| (*e1, *e2))
            .expect("nonzero");
        if !(e1 >= e2 && e2 >= 0) {
            return Err(Error::NotACharacter(format!(
                "leading weight α1^{e1} α2^{e2} is not dominant"
            )));
        }
        if !c.is_integer() || c <= rat(0) {
            return Err(Error::NotACharacter(format!(
                "negative multiplicity {c} at weight ({},{})",
                e1 - e2,
                e2
            )));
        }
        let (m1, m2) = (i64::from(e1 - e2), i64::from(e2));
        let mult: i64 = c.to_integer().try_into().map_err(|_| Error::InvalidArgument("multiplicity overflow".into()))?;
        rest = rest - schur_char(m1, m2)?.scale(&c);
        out.insert((m1, m2), mult);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::c;

    /// Brute-force Schur polynomial: sum over semistandard tableaux of shape
    /// (l1, l2) with entries in {1,2,3}.
    fn ssyt_schur(l1: usize, l2: usize) -> LaurentPoly {
        fn rows(len: usize) -> Vec<Vec<u8>> {
            let mut out = Vec::new();
            for a in 0..=len {
                for b in 0..=(len - a) {
                    let mut r = vec![1u8; a];
                    r.extend(vec![2u8; b]);
                    r.extend(vec![3u8; len - a - b]);
                    out.push(r);
                }
            }
            out
        }
        let xs = [v(ALPHA1), v(ALPHA2), alpha3()];
        let mut total = LaurentPoly::zero();
        for top in rows(l1) {
            for bottom in rows(l2) {
                if (0..l2).all(|i| bottom[i] > top[i]) {
                    let mut m = c(1);
                    for &e in top.iter().chain(&bottom) {
                        m = m * xs[e as usize - 1].clone();
                    }
                    total = total + m;
                }
            }
        }
        total
    }

    #[test]
    fn schur_matches_tableaux() {
        for m1 in 0..4 {
            for m2 in 0..4 {
                let s = schur_char(m1, m2).unwrap();
                let t = ssyt_schur((m1 + m2) as usize, m2 as usize);
                assert_eq!(s, t, "({m1},{m2})");
                assert_eq!(dimension(&s), rat(weyl_dimension(m1, m2)));
            }
        }
    }

    #[test]
    fn adjoint_character() {
        let xs = [v(ALPHA1), v(ALPHA2), alpha3()];
        let mut expected = c(2);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    expected = expected + &xs[i] * xs[j].pow(-1).unwrap();
                }
            }
        }
        assert_eq!(schur_char(1, 1).unwrap(), expected);
        assert_eq!(schur_char(0, 0).unwrap(), c(1));
        assert!(schur_char(-1, 0).is_err());
    }

    #[test]
    fn sl2_examples() {
        let z = v("z");
        assert_eq!(sl2_char(0, &z).unwrap(), c(1));
        assert_eq!(
            sl2_char(2, &z).unwrap(),
            &z * &z + c(1) + z.pow(-2).unwrap()
        );
        let lhs = sl2_char(2, &z).unwrap() * sl2_char(3, &z).unwrap();
        let rhs = (0..=2).fold(c(0), |acc, i| acc + sl2_char(5 - 2 * i, &z).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_powers_of_adjoint() {
        let adj = schur_char(1, 1).unwrap();
        assert_eq!(sym_power_char(&adj, 0).unwrap(), c(1));
        assert_eq!(sym_power_char(&adj, 1).unwrap(), adj);
        let s2 = sym_power_char(&adj, 2).unwrap();
        assert_eq!(dimension(&s2), rat(36));
        let dec = schur_expand(&s2).unwrap();
        assert_eq!(dec, BTreeMap::from([((2, 2), 1), ((1, 1), 1), ((0, 0), 1)]));
        let s3 = sym_power_char(&adj, 3).unwrap();
        assert_eq!(dimension(&s3), rat(120));
        let dec3 = schur_expand(&s3).unwrap();
        let total: i64 = dec3.iter().map(|(&(a, b), m)| m * weyl_dimension(a, b)).sum();
        assert_eq!(total, 120);
    }

    #[test]
    fn expand_rejects_non_characters() {
        let bad = v(ALPHA1);
        assert!(matches!(schur_expand(&bad), Err(Error::NotACharacter(_))));
        let neg = c(8) - schur_char(1, 1).unwrap();
        assert!(schur_expand(&neg).is_err());
    }
}
