//! The prime field F_P as a matrix scalar.

use std::fmt;

use num_traits::{Signed, ToPrimitive};

use crate::algebra::{Rational, Ring};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow_u64(self, mut e: u64) -> Self {
        let mut acc = 1u64;
        let mut b = self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        Fp(acc)
    }

    pub fn is_square(self) -> bool {
        self.0 == 0 || self.pow_u64((P - 1) / 2).0 == 1
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root() -> Self {
        let n = P - 1;
        let prime_factors: Vec<u64> = (2..=n).filter(|d| n.is_multiple_of(*d) && (2..*d).all(|k| !d.is_multiple_of(k))).collect();
        (2..P)
            .map(Fp)
            .find(|g| prime_factors.iter().all(|p| g.pow_u64(n / p).0 != 1))
            .expect("F_P^* is cyclic")
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Ring for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(self.0 * o.0 % P)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow_u64(P - 2))
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        let p = num_bigint::BigInt::from(P);
        let reduce = |n: &num_bigint::BigInt| {
            let m = ((n % &p) + &p) % &p;
            Fp::<P>(m.to_u64().expect("reduced below P"))
        };
        let num = reduce(r.numer());
        let den = reduce(&r.denom().abs());
        let den = if r.denom().is_negative() { den.neg() } else { den };
        den.inv().map(|d| num.mul(&d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_frac;
    use proptest::prelude::*;

    type F7 = Fp<7>;

    #[test]
    fn inverses_and_squares() {
        for n in 1..7 {
            let a = F7::new(n);
            assert_eq!(a.mul(&a.inv().unwrap()), F7::one());
        }
        let squares: Vec<i64> = (1..7).filter(|&n| F7::new(n).is_square()).collect();
        assert_eq!(squares, vec![1, 2, 4]);
        assert_eq!(F7::primitive_root(), F7::new(3));
        assert_eq!(Fp::<5>::primitive_root(), Fp::<5>::new(2));
    }

    #[test]
    fn rationals_reduce() {
        assert_eq!(F7::from_rational(&rat_frac(1, 2)), Some(F7::new(4)));
        assert_eq!(F7::from_rational(&rat_frac(-3, 4)), Some(F7::new(1)));
        assert_eq!(F7::from_rational(&rat_frac(1, 7)), None);
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0i64..13, b in 0i64..13, c in 0i64..13) {
            let (a, b, c) = (Fp::<13>::new(a), Fp::<13>::new(b), Fp::<13>::new(c));
            prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
            prop_assert_eq!(a.sub(&b).add(&b), a);
            if !b.is_zero() {
                prop_assert_eq!(a.div_exact(&b).unwrap().mul(&b), a);
            }
        }
    }
}
