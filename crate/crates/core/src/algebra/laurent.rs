use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::rational::{fmt_rational, is_negative, rat};
use super::Rational;
use crate::error::{Error, Result};

/// Dense exponent vector, indexed like the owning polynomial's variable list.
pub type Exponents = Vec<i32>;

/// Multivariate Laurent polynomial over the rationals.
///
/// Variables are kept sorted by name. Two polynomials over different variable
/// lists are aligned by name before any binary operation, so `a + b` works
/// regardless of which variables each side mentions. Zero coefficients are
/// never stored.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Exponents, Rational>,
}

fn union_vars(a: &Arc<[String]>, b: &Arc<[String]>) -> Arc<[String]> {
    if Arc::ptr_eq(a, b) || a == b || b.is_empty() {
        return a.clone();
    }
    if a.is_empty() {
        return b.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j].clone());
            j += 1;
        } else {
            out.push(a[i].clone());
            i += 1;
            j += 1;
        }
    }
    out.into()
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            vars: Arc::from(Vec::<String>::new()),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        LaurentPoly {
            vars: Arc::from(Vec::<String>::new()),
            terms,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(rat(1), &[(name, 1)])
    }

    /// `coeff * Π name^exp`; repeated names are combined.
    pub fn monomial(coeff: Rational, powers: &[(&str, i32)]) -> Self {
        let mut names: Vec<String> = powers.iter().map(|(n, _)| n.to_string()).collect();
        names.sort();
        names.dedup();
        let mut exps = vec![0; names.len()];
        for (n, e) in powers {
            let idx = names.binary_search_by(|v| v.as_str().cmp(n)).unwrap();
            exps[idx] += e;
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        LaurentPoly {
            vars: names.into(),
            terms,
        }
    }

    /// Builds a polynomial from `(coefficient, powers)` pairs.
    pub fn from_terms(terms: &[(Rational, Vec<(&str, i32)>)]) -> Self {
        terms
            .iter()
            .fold(Self::zero(), |acc, (c, p)| acc + Self::monomial(c.clone(), p))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Terms as `(coefficient, [(var, exp)])` with zero exponents dropped.
    pub fn named_terms(&self) -> Vec<(Rational, Vec<(String, i32)>)> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let powers = self
                    .vars
                    .iter()
                    .zip(e)
                    .filter(|(_, &x)| x != 0)
                    .map(|(v, &x)| (v.clone(), x))
                    .collect();
                (c.clone(), powers)
            })
            .collect()
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    /// Variables that actually occur with a nonzero exponent.
    pub fn support_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] != 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Coefficient of the monomial with all exponents zero.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// A single nonzero term is a unit of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    fn aligned_terms(&self, target: &Arc<[String]>) -> BTreeMap<Exponents, Rational> {
        if Arc::ptr_eq(&self.vars, target) || *self.vars == **target {
            return self.terms.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.binary_search(v).expect("target contains all variables"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; target.len()];
                for (i, &x) in e.iter().enumerate() {
                    ne[map[i]] = x;
                }
                (ne, c.clone())
            })
            .collect()
    }

    fn aligned(&self, target: &Arc<[String]>) -> LaurentPoly {
        LaurentPoly {
            vars: target.clone(),
            terms: self.aligned_terms(target),
        }
    }

    fn combine(&self, other: &Self, sign: i32) -> Self {
        let vars = union_vars(&self.vars, &other.vars);
        let mut terms = self.aligned_terms(&vars);
        let rhs = if Arc::ptr_eq(&other.vars, &vars) || *other.vars == *vars {
            std::borrow::Cow::Borrowed(&other.terms)
        } else {
            std::borrow::Cow::Owned(other.aligned_terms(&vars))
        };
        for (e, c) in rhs.iter() {
            let entry = terms.entry(e.clone()).or_insert_with(Rational::zero);
            if sign > 0 {
                *entry += c;
            } else {
                *entry -= c;
            }
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { vars, terms }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let vars = union_vars(&self.vars, &other.vars);
        let lhs = self.aligned_terms(&vars);
        let rhs = other.aligned_terms(&vars);
        let mut terms: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e1, c1) in &lhs {
            for (e2, c2) in &rhs {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let c = c1 * c2;
                match terms.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += c;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
        }
        LaurentPoly { vars, terms }
    }

    pub fn neg_ref(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Inverse of a single-term polynomial.
    pub fn inv(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let mut terms = BTreeMap::new();
        terms.insert(e.iter().map(|x| -x).collect(), c.recip());
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Integer power; negative powers require a unit.
    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 {
            return Ok(super::Ring::pow(&self.inv()?, e.unsigned_abs()));
        }
        Ok(super::Ring::pow(self, e as u32))
    }

    /// Multiplies every exponent by `k` (the Adams operation on characters).
    pub fn scale_exponents(&self, k: i32) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| x * k).collect(), c.clone()))
                .collect(),
        }
    }

    /// Simultaneous substitution `name -> replacement`.
    ///
    /// A negative power of a substituted variable needs a unit replacement.
    pub fn substitute(&self, subs: &[(&str, LaurentPoly)]) -> Result<Self> {
        let idx: Vec<Option<usize>> = subs.iter().map(|(n, _)| self.var_index(n)).collect();
        if idx.iter().all(Option::is_none) {
            return Ok(self.clone());
        }
        let mut power_cache: Vec<BTreeMap<i32, LaurentPoly>> = vec![BTreeMap::new(); subs.len()];
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let mut term = LaurentPoly::zero();
            for i in idx.iter().flatten() {
                rest[*i] = 0;
            }
            term.terms.insert(rest, c.clone());
            term.vars = self.vars.clone();
            for (s, i) in idx.iter().enumerate() {
                let Some(i) = *i else { continue };
                let k = e[i];
                if k == 0 {
                    continue;
                }
                let p = match power_cache[s].get(&k) {
                    Some(p) => p.clone(),
                    None => {
                        let p = subs[s].1.pow(k)?;
                        power_cache[s].insert(k, p.clone());
                        p
                    }
                };
                term = term.mul_ref(&p);
            }
            out = out.add_ref(&term);
        }
        Ok(out)
    }

    /// Substitutes rational values for variables.
    pub fn eval_partial(&self, values: &[(&str, Rational)]) -> Result<Self> {
        let subs: Vec<(&str, LaurentPoly)> = values
            .iter()
            .map(|(n, v)| (*n, LaurentPoly::constant(v.clone())))
            .collect();
        self.substitute(&subs)
    }

    pub fn max_degree(&self, name: &str) -> Option<i32> {
        let i = self.var_index(name);
        self.terms
            .keys()
            .map(|e| i.map_or(0, |i| e[i]))
            .max()
    }

    pub fn min_degree(&self, name: &str) -> Option<i32> {
        let i = self.var_index(name);
        self.terms
            .keys()
            .map(|e| i.map_or(0, |i| e[i]))
            .min()
    }

    /// Exponent of `name` in an exponent vector of this polynomial.
    pub fn exponent_in(&self, exps: &[i32], name: &str) -> i32 {
        self.var_index(name).map_or(0, |i| exps[i])
    }

    /// Groups terms by their exponents in `names`; each group is returned as a
    /// polynomial in the remaining variables.
    pub fn collect_by(&self, names: &[&str]) -> BTreeMap<Vec<i32>, LaurentPoly> {
        let idx: Vec<Option<usize>> = names.iter().map(|n| self.var_index(n)).collect();
        let mut out: BTreeMap<Vec<i32>, BTreeMap<Exponents, Rational>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<i32> = idx.iter().map(|i| i.map_or(0, |i| e[i])).collect();
            let mut rest = e.clone();
            for i in idx.iter().flatten() {
                rest[*i] = 0;
            }
            out.entry(key).or_default().insert(rest, c.clone());
        }
        out.into_iter()
            .map(|(k, terms)| {
                (
                    k,
                    LaurentPoly {
                        vars: self.vars.clone(),
                        terms,
                    },
                )
            })
            .collect()
    }

    /// Coefficient of `Π names^exps`, as a polynomial in the other variables.
    pub fn coefficient(&self, names: &[&str], exps: &[i32]) -> LaurentPoly {
        self.collect_by(names)
            .remove(exps)
            .unwrap_or_else(LaurentPoly::zero)
    }

    /// Exact division. Fails when `divisor` does not divide `self` in the
    /// Laurent ring.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if divisor.is_unit() {
            return Ok(self.mul_ref(&divisor.inv()?));
        }
        let vars = union_vars(&self.vars, &divisor.vars);
        let d = divisor.aligned(&vars);
        let mut r = self.aligned(&vars);
        let n = vars.len();
        // per-variable lower bound for quotient exponents of an exact division
        let lower: Vec<i32> = (0..n)
            .map(|i| {
                let mp = r.terms.keys().map(|e| e[i]).min().unwrap();
                let md = d.terms.keys().map(|e| e[i]).min().unwrap();
                mp - md
            })
            .collect();
        let (d_lead_e, d_lead_c) = d.terms.iter().next_back().unwrap();
        let mut q: BTreeMap<Exponents, Rational> = BTreeMap::new();
        let not_divisible = || Error::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        while let Some((r_e, r_c)) = r.terms.iter().next_back() {
            let te: Exponents = r_e.iter().zip(d_lead_e).map(|(a, b)| a - b).collect();
            if te.iter().zip(&lower).any(|(x, lo)| x < lo) {
                return Err(not_divisible());
            }
            let tc = r_c / d_lead_c;
            let mut t = LaurentPoly {
                vars: vars.clone(),
                terms: BTreeMap::new(),
            };
            t.terms.insert(te.clone(), tc.clone());
            r = r.sub_ref(&t.mul_ref(&d));
            q.insert(te, tc);
        }
        Ok(LaurentPoly { vars, terms: q })
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&[i32]) -> bool) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of the exponents of `names` in an exponent vector of this polynomial.
    pub fn degree_of(&self, exps: &[i32], names: &[String]) -> i32 {
        names
            .iter()
            .filter_map(|n| self.var_index(n))
            .map(|i| exps[i])
            .sum()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            return self.terms == other.terms;
        }
        self.sub_ref(other).is_zero()
    }
}

impl Eq for LaurentPoly {}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by_key(|(e, _)| std::cmp::Reverse((e.iter().sum::<i32>(), (*e).clone())));
        let mut first = true;
        for (e, c) in order {
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e)
                .filter(|(_, &x)| x != 0)
                .map(|(v, &x)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            let neg = is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl super::Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn one() -> Self {
        LaurentPoly::one()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        self.add_ref(other)
    }

    fn sub(&self, other: &Self) -> Self {
        self.sub_ref(other)
    }

    fn mul(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }

    fn neg(&self) -> Self {
        self.neg_ref()
    }

    fn div_exact(&self, other: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, other).ok()
    }

    fn inv(&self) -> Option<Self> {
        LaurentPoly::inv(self).ok()
    }

    fn from_rational(r: &Rational) -> Option<Self> {
        Some(LaurentPoly::constant(r.clone()))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$inner(rhs)
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$inner(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$inner(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

/// Shorthand for `LaurentPoly::var`.
pub fn v(name: &str) -> LaurentPoly {
    LaurentPoly::var(name)
}

/// Shorthand for an integer constant.
pub fn c(n: i64) -> LaurentPoly {
    LaurentPoly::int(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_frac;

    #[test]
    fn alignment_by_name() {
        let p = v("b") + v("a");
        let q = v("c") * v("a");
        let s = &p + &q;
        assert_eq!(s.vars(), ["a", "b", "c"]);
        assert_eq!(s, v("a") + v("b") + v("a") * v("c"));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = v("x") - v("x");
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn exact_division_of_norm_form() {
        let a = v("a");
        let b = v("b");
        let rho = v("rho");
        let n = &a * &a - &b * &b * &rho;
        let prod = &n * &(&a + c(3));
        assert_eq!(prod.div_exact(&n).unwrap(), &a + c(3));
        assert!(prod.div_exact(&(&a - &b)).is_err());
    }

    #[test]
    fn division_with_negative_exponents() {
        let x = v("x");
        let xi = x.inv().unwrap();
        let d = &x - &xi;
        let p = &d * &(&x * &x + c(1) + &xi);
        assert_eq!(p.div_exact(&d).unwrap(), &x * &x + c(1) + &xi);
    }

    #[test]
    fn simultaneous_substitution_swaps() {
        let p = v("a") * v("a") + v("b");
        let s = p.substitute(&[("a", v("b")), ("b", v("a"))]).unwrap();
        assert_eq!(s, v("b") * v("b") + v("a"));
    }

    #[test]
    fn negative_power_needs_unit() {
        assert!((v("a") + c(1)).pow(-1).is_err());
        assert_eq!(v("a").pow(-2).unwrap().to_string(), "a^-2");
    }

    #[test]
    fn display_is_deterministic() {
        let p = LaurentPoly::monomial(rat_frac(-1, 2), &[("x", 2), ("q", -1)]) + c(3);
        assert_eq!(p.to_string(), "-1/2*q^-1*x^2 + 3");
    }

    #[test]
    fn coefficient_extraction() {
        let p = v("x") * v("t") + v("x") * c(2) + v("t");
        assert_eq!(p.coefficient(&["x"], &[1]), v("t") + c(2));
        assert_eq!(p.coefficient(&["x"], &[0]), v("t"));
    }
}
