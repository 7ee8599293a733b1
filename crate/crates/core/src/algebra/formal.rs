//! Formal inverses of polynomials that are not units of the Laurent ring.
//!
//! A symbol such as `Ninv` stands for `1/N`. Expressions stay Laurent
//! polynomials in the symbol; zero tests multiply through by a power of `N`
//! and substitute, which is exact because the Laurent ring is a domain.

use super::LaurentPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct FormalInverses {
    rels: Vec<(String, LaurentPoly)>,
}

impl FormalInverses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares `symbol = 1/value`.
    pub fn with(mut self, symbol: &str, value: LaurentPoly) -> Self {
        self.rels.push((symbol.to_string(), value));
        self
    }

    pub fn relations(&self) -> &[(String, LaurentPoly)] {
        &self.rels
    }

    fn clear_one(p: &LaurentPoly, symbol: &str, value: &LaurentPoly) -> Result<(LaurentPoly, i32)> {
        let lo = p.min_degree(symbol).unwrap_or(0);
        if lo < 0 {
            return Err(Error::InvalidArgument(format!(
                "negative power of the formal inverse {symbol}"
            )));
        }
        let k = p.max_degree(symbol).unwrap_or(0);
        if k == 0 {
            return Ok((p.clone(), 0));
        }
        let mut out = LaurentPoly::zero();
        for (e, coeff) in p.collect_by(&[symbol]) {
            out = out + coeff * value.pow(k - e[0])?;
        }
        Ok((out, k))
    }

    /// `p` multiplied by the smallest product of the inverted values that
    /// removes every formal symbol.
    pub fn clear(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        let mut cur = p.clone();
        for (s, v) in &self.rels {
            cur = Self::clear_one(&cur, s, v)?.0;
        }
        Ok(cur)
    }

    pub fn is_zero(&self, p: &LaurentPoly) -> bool {
        self.clear(p).map(|c| c.is_zero()).unwrap_or(false)
    }

    pub fn equal(&self, p: &LaurentPoly, q: &LaurentPoly) -> bool {
        self.is_zero(&(p - q))
    }

    /// Rewrites `p` as `P * symbol^k` with `k` as small as exact division by
    /// the inverted value allows.
    pub fn normal_form(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        let mut cur = p.clone();
        for (s, v) in &self.rels {
            let (mut body, mut k) = Self::clear_one(&cur, s, v)?;
            while k > 0 {
                match body.div_exact(v) {
                    Ok(q) => {
                        body = q;
                        k -= 1;
                    }
                    Err(_) => break,
                }
            }
            cur = body * LaurentPoly::monomial(super::rat(1), &[(s, k)]);
        }
        Ok(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::{c, v};

    fn norm() -> LaurentPoly {
        v("a") * v("a") - v("b") * v("b") * v("rho")
    }

    #[test]
    fn cancels_against_value() {
        let inv = FormalInverses::new().with("Ninv", norm());
        assert!(inv.equal(&(norm() * v("Ninv")), &c(1)));
        assert!(!inv.is_zero(&v("Ninv")));
        let p = v("a") * norm() * v("Ninv") * v("Ninv");
        assert_eq!(inv.normal_form(&p).unwrap(), v("a") * v("Ninv"));
    }

    #[test]
    fn two_symbols() {
        let inv = FormalInverses::new()
            .with("Ninv", norm())
            .with("Minv", v("x") + c(1));
        let p = v("Ninv") * v("Minv") * norm() * (v("x") + c(1));
        assert!(inv.equal(&p, &c(1)));
    }

    #[test]
    fn rejects_negative_symbol_power() {
        let inv = FormalInverses::new().with("Ninv", norm());
        assert!(inv.clear(&v("Ninv").pow(-1).unwrap()).is_err());
    }
}
