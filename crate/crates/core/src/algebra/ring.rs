use std::fmt::Debug;

use super::Rational;

/// Exact commutative ring scalars used as matrix entries.
pub trait Ring: Clone + Debug + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Exact quotient, `None` when `other` does not divide `self`.
    fn div_exact(&self, other: &Self) -> Option<Self>;

    /// Multiplicative inverse of a unit.
    fn inv(&self) -> Option<Self>;

    /// Image of a rational number, `None` when its denominator is not invertible.
    fn from_rational(r: &Rational) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
            .expect("integers embed in every ring")
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}
