//! Modulus characters on the split torus, as exponents of q.

use serde::Serialize;

use crate::error::{Error, Result};

/// Exponents `e` with value `q^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ModulusValues {
    /// `δ_P(w2 t' w2)`.
    pub delta_p: i64,
    /// `|α2(t')|`.
    pub alpha2: i64,
    /// `δ_B^{-1/2}(t)`.
    pub delta_b_inv_half: i64,
}

fn check_nonnegative(m1: i64, m2: i64) -> Result<()> {
    if m1 < 0 || m2 < 0 {
        return Err(Error::InvalidArgument(format!(
            "valuations must be nonnegative, got ({m1},{m2})"
        )));
    }
    Ok(())
}

/// The split-case values as displayed: `-max(m1,m2)`, `-min(m1,m2)`, `-m1-m2`.
pub fn modulus_characters(m1: i64, m2: i64) -> Result<ModulusValues> {
    check_nonnegative(m1, m2)?;
    Ok(ModulusValues {
        delta_p: -m1.max(m2),
        alpha2: -m1.min(m2),
        delta_b_inv_half: -m1 - m2,
    })
}

/// The same quantities from `|N|^2/max(|a|,|b|)^3`, `max(|a|,|b|)^3/|N|` and
/// `|N|^{-1}`, with `N = t1 t2`, `max(|a|,|b|) = max(|t1|,|t2|)`, and
/// `m1 = v(t1^{-1} t2^2)`, `m2 = v(t1^2 t2^{-1})`.
pub fn modulus_from_norms(m1: i64, m2: i64) -> Result<ModulusValues> {
    check_nonnegative(m1, m2)?;
    if (m1 - m2).rem_euclid(3) != 0 {
        return Err(Error::InvalidArgument(format!(
            "(m1,m2) = ({m1},{m2}) does not come from the torus: 3 does not divide m1-m2"
        )));
    }
    let v1 = (m1 + 2 * m2) / 3;
    let v2 = (2 * m1 + m2) / 3;
    // |x| = q^{-v(x)}
    let abs_n = -(v1 + v2);
    let abs_max = -v1.min(v2);
    Ok(ModulusValues {
        delta_p: 2 * abs_n - 3 * abs_max,
        alpha2: 3 * abs_max - abs_n,
        delta_b_inv_half: -abs_n,
    })
}
