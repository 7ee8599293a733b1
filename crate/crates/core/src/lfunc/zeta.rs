//! Local zeta factors rewritten in `x = q^{-3s+1}`.

use std::fmt;

use serde::Serialize;

use super::{Q, X};
use crate::algebra::laurent::c;
use crate::algebra::{rat, LaurentPoly, RationalFunction};
use crate::error::{Error, Result};

/// A zeta argument `c1·s + c0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaArg {
    pub c1: i64,
    pub c0: i64,
}

impl ZetaArg {
    pub const fn new(c1: i64, c0: i64) -> Self {
        ZetaArg { c1, c0 }
    }

    /// `(q^e, x^k)` with `q^{-(c1 s + c0)} = q^e x^k`.
    pub fn in_x(&self) -> Result<(i64, i64)> {
        if self.c1 % 3 != 0 {
            return Err(Error::NotExpressibleInX { c1: self.c1, c0: self.c0 });
        }
        let k = self.c1 / 3;
        Ok((-self.c0 - k, k))
    }
}

impl fmt::Display for ZetaArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.c0 {
            0 => write!(f, "{}s", self.c1),
            c0 => write!(f, "{}s{:+}", self.c1, c0),
        }
    }
}

pub type ZetaTriple = [ZetaArg; 3];

/// As printed in the normalization of the unramified integral.
pub const PRINTED_TRIPLE: ZetaTriple = [ZetaArg::new(3, 0), ZetaArg::new(6, -2), ZetaArg::new(3, -9)];

/// As forced by the `(1-x^2)(1-x^3)` factors of the computation.
pub const RECONSTRUCTED_TRIPLE: ZetaTriple =
    [ZetaArg::new(3, 0), ZetaArg::new(6, -2), ZetaArg::new(9, -3)];

pub fn triple_label(t: &ZetaTriple) -> String {
    format!("{{{}, {}, {}}}", t[0], t[1], t[2])
}

/// `1 - q^e x^k`, the reciprocal of `ζ(c1 s + c0)`.
pub fn zeta_reciprocal(arg: ZetaArg) -> Result<LaurentPoly> {
    let (e, k) = arg.in_x()?;
    let to_i32 = |n: i64| i32::try_from(n).map_err(|_| Error::InvalidArgument(format!("exponent {n} too large")));
    if k < 0 {
        return Err(Error::InvalidArgument(format!("ζ({arg}) has a negative power of x")));
    }
    Ok(c(1) - LaurentPoly::monomial(rat(1), &[(Q, to_i32(e)?), (X, to_i32(k)?)]))
}

/// `ζ(c1 s + c0) = 1 / (1 - q^e x^{c1/3})` with `e = -c0 - c1/3`.
pub fn zeta_factor(c1: i64, c0: i64) -> Result<RationalFunction> {
    RationalFunction::new(c(1), zeta_reciprocal(ZetaArg::new(c1, c0))?)
}

/// `1 / (ζ(a) ζ(b) ζ(c))` as a polynomial in `q^{±1}` and `x`.
pub fn triple_reciprocal(t: &ZetaTriple) -> Result<LaurentPoly> {
    t.iter().try_fold(c(1), |acc, &a| Ok(acc * zeta_reciprocal(a)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::v;

    #[test]
    fn examples() {
        let q_inv = v(Q).pow(-1).unwrap();
        let x = v(X);
        assert_eq!(zeta_factor(3, 0).unwrap().den, c(1) - &q_inv * &x);
        assert_eq!(zeta_factor(6, -2).unwrap().den, c(1) - &x * &x);
        assert_eq!(zeta_factor(9, -3).unwrap().den, c(1) - x.pow(3).unwrap());
        assert_eq!(zeta_factor(3, -9).unwrap().den, c(1) - v(Q).pow(8).unwrap() * &x);
        assert_eq!(
            zeta_factor(4, 0).unwrap_err(),
            Error::NotExpressibleInX { c1: 4, c0: 0 }
        );
    }

    #[test]
    fn labels() {
        assert_eq!(triple_label(&PRINTED_TRIPLE), "{3s, 6s-2, 3s-9}");
        assert_eq!(triple_label(&RECONSTRUCTED_TRIPLE), "{3s, 6s-2, 9s-3}");
    }
}
