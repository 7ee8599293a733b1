//! The SL2 inner integral `∫_F f(w2 x_{α2}(u), s) ψ(cu) du`, as a Laurent
//! polynomial in `q` and `x`.

use super::{Q, X};
use crate::algebra::laurent::{c, v};
use crate::algebra::{rat, LaurentPoly};
use crate::error::Result;

/// `∫_{v(u) = -k} ψ(cu) du` for the shell `|u| = q^k`, `k ≥ 1`, with `ψ`
/// trivial on the integers and nontrivial on the next shell.
pub fn shell_character_sum(k: i64, vc: i64) -> LaurentPoly {
    let q = |e: i64| LaurentPoly::monomial(rat(1), &[(Q, e as i32)]);
    if k <= vc {
        q(k) - q(k - 1)
    } else if k == vc + 1 {
        -q(vc)
    } else {
        LaurentPoly::zero()
    }
}

/// `∫_{|u| ≤ 1} ψ(cu) du`: the volume 1 when `ψ(c·)` is trivial on the
/// integers, zero otherwise.
fn integral_over_integers(vc: i64) -> LaurentPoly {
    if vc >= 0 {
        c(1)
    } else {
        LaurentPoly::zero()
    }
}

/// Shell summation. On `|u| = q^k` the section is `|u|^{-3s} = (x/q)^k`.
pub fn inner_integral(vc: i64) -> LaurentPoly {
    let mut total = integral_over_integers(vc);
    for k in 1..=(vc + 1).max(0) {
        let weight = LaurentPoly::monomial(rat(1), &[(X, k as i32), (Q, -(k as i32))]);
        total = total + weight * shell_character_sum(k, vc);
    }
    total
}

/// `(1 - q^{-1}x)(1 - x^{vc+1})/(1 - x)`, exactly.
pub fn inner_integral_closed_form(vc: i64) -> Result<LaurentPoly> {
    let x = v(X);
    let prefactor = c(1) - v(Q).pow(-1)? * &x;
    let ratio = (c(1) - x.pow((vc + 1) as i32)?).div_exact(&(c(1) - &x))?;
    Ok(prefactor * ratio)
}
