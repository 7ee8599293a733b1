use std::fmt;

use super::{series_expand, LaurentPoly, TruncatedSeries};
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials, kept unreduced. Equality is decided
/// by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn cross_equals(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn expand(&self, vars: &[&str], bound: u32) -> Result<TruncatedSeries> {
        series_expand(&self.num, &self.den, vars, bound)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.cross_equals(other)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
