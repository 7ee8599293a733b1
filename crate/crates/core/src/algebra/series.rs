use std::fmt;

use super::LaurentPoly;
use crate::error::{Error, Result};

/// Power series in a designated set of series variables, cut at a total
/// degree bound. Every other variable is carried exactly.
///
/// Stored as homogeneous components: `comps[d]` holds the terms of total
/// series-degree `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    series_vars: Vec<String>,
    bound: u32,
    comps: Vec<LaurentPoly>,
}

/// First coefficient where two series disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesDiff {
    pub degree: u32,
    /// Exponents of the series variables, in the series' variable order.
    pub exponents: Vec<i32>,
    pub monomial: String,
    pub left: LaurentPoly,
    pub right: LaurentPoly,
}

impl fmt::Display for SeriesDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient of {}: {} vs {}",
            self.monomial, self.left, self.right
        )
    }
}

fn sorted_names(vars: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    v.sort();
    v.dedup();
    v
}

impl TruncatedSeries {
    pub fn zero(series_vars: &[&str], bound: u32) -> Self {
        TruncatedSeries {
            series_vars: sorted_names(series_vars),
            bound,
            comps: vec![LaurentPoly::zero(); bound as usize + 1],
        }
    }

    pub fn one(series_vars: &[&str], bound: u32) -> Self {
        let mut s = Self::zero(series_vars, bound);
        s.comps[0] = LaurentPoly::one();
        s
    }

    /// Splits a polynomial into series-degree components, dropping degrees
    /// above `bound`.
    pub fn from_poly(p: &LaurentPoly, series_vars: &[&str], bound: u32) -> Result<Self> {
        let names = sorted_names(series_vars);
        let mut comps = vec![LaurentPoly::zero(); bound as usize + 1];
        for (d, slot) in comps.iter_mut().enumerate() {
            *slot = p.filter_terms(|e| p.degree_of(e, &names) == d as i32);
        }
        for (e, _) in p.terms() {
            for n in &names {
                if p.exponent_in(e, n) < 0 {
                    return Err(Error::NegativeSeriesExponent {
                        var: n.clone(),
                        poly: p.to_string(),
                    });
                }
            }
        }
        Ok(TruncatedSeries {
            series_vars: names,
            bound,
            comps,
        })
    }

    pub fn series_vars(&self) -> &[String] {
        &self.series_vars
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Homogeneous component of series-degree `d` (zero above the bound).
    pub fn component(&self, d: u32) -> LaurentPoly {
        self.comps
            .get(d as usize)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn to_poly(&self) -> LaurentPoly {
        self.comps
            .iter()
            .fold(LaurentPoly::zero(), |acc, c| acc + c)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(LaurentPoly::is_zero)
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(
            self.series_vars, other.series_vars,
            "series over different variable sets"
        );
    }

    pub fn truncate(&self, bound: u32) -> Self {
        let b = bound.min(self.bound);
        TruncatedSeries {
            series_vars: self.series_vars.clone(),
            bound: b,
            comps: self.comps[..=b as usize].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let b = self.bound.min(other.bound);
        let comps = (0..=b as usize)
            .map(|d| &self.comps[d] + &other.comps[d])
            .collect();
        TruncatedSeries {
            series_vars: self.series_vars.clone(),
            bound: b,
            comps,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            series_vars: self.series_vars.clone(),
            bound: self.bound,
            comps: self.comps.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let b = self.bound.min(other.bound) as usize;
        let mut comps = vec![LaurentPoly::zero(); b + 1];
        for i in 0..=b {
            if self.comps[i].is_zero() {
                continue;
            }
            for j in 0..=(b - i) {
                if other.comps[j].is_zero() {
                    continue;
                }
                comps[i + j] = &comps[i + j] + &(&self.comps[i] * &other.comps[j]);
            }
        }
        TruncatedSeries {
            series_vars: self.series_vars.clone(),
            bound: b as u32,
            comps,
        }
    }

    /// Multiplies by a polynomial with nonnegative series exponents.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<Self> {
        let names: Vec<&str> = self.series_vars.iter().map(String::as_str).collect();
        Ok(self.mul(&Self::from_poly(p, &names, self.bound)?))
    }

    /// Multiplicative inverse. The degree-zero component must be a single
    /// term (an exact unit).
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.comps[0];
        let inv0 = a0.inv().map_err(|_| Error::NonInvertibleConstant {
            denominator: self.to_poly().to_string(),
        })?;
        let b = self.bound as usize;
        let mut out = vec![LaurentPoly::zero(); b + 1];
        out[0] = inv0.clone();
        for n in 1..=b {
            let mut acc = LaurentPoly::zero();
            for k in 1..=n {
                if self.comps[k].is_zero() || out[n - k].is_zero() {
                    continue;
                }
                acc = acc + &self.comps[k] * &out[n - k];
            }
            out[n] = -(&inv0 * &acc);
        }
        Ok(TruncatedSeries {
            series_vars: self.series_vars.clone(),
            bound: self.bound,
            comps: out,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Coefficient of a monomial in the series variables, as a polynomial in
    /// the exact variables.
    pub fn coefficient(&self, powers: &[(&str, i32)]) -> LaurentPoly {
        let exps: Vec<i32> = self
            .series_vars
            .iter()
            .map(|n| {
                powers
                    .iter()
                    .filter(|(p, _)| p == n)
                    .map(|(_, e)| *e)
                    .sum()
            })
            .collect();
        let d: i32 = exps.iter().sum();
        if d < 0 || d as u32 > self.bound {
            return LaurentPoly::zero();
        }
        let names: Vec<&str> = self.series_vars.iter().map(String::as_str).collect();
        self.comps[d as usize].coefficient(&names, &exps)
    }

    /// Lowest-degree coefficient where `self` and `other` differ, compared up
    /// to the smaller of the two bounds.
    pub fn first_difference(&self, other: &Self) -> Option<SeriesDiff> {
        self.check_compatible(other);
        let names: Vec<&str> = self.series_vars.iter().map(String::as_str).collect();
        let b = self.bound.min(other.bound);
        for d in 0..=b {
            let diff = &self.comps[d as usize] - &other.comps[d as usize];
            if diff.is_zero() {
                continue;
            }
            let groups = diff.collect_by(&names);
            let exps = groups.keys().next().unwrap().clone();
            let monomial = names
                .iter()
                .zip(&exps)
                .filter(|(_, &e)| e != 0)
                .map(|(n, &e)| if e == 1 { n.to_string() } else { format!("{n}^{e}") })
                .collect::<Vec<_>>()
                .join("*");
            return Some(SeriesDiff {
                degree: d,
                monomial: if monomial.is_empty() { "1".into() } else { monomial },
                left: self.comps[d as usize].coefficient(&names, &exps),
                right: other.comps[d as usize].coefficient(&names, &exps),
                exponents: exps,
            });
        }
        None
    }

    /// Number of nonzero coefficients (over series monomials).
    pub fn num_coefficients(&self) -> usize {
        let names: Vec<&str> = self.series_vars.iter().map(String::as_str).collect();
        self.comps.iter().map(|c| c.collect_by(&names).len()).sum()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg {})", self.to_poly(), self.bound + 1)
    }
}

/// Power-series expansion of `numerator / denominator` in `vars`, truncated at
/// total degree `bound`.
pub fn series_expand(
    numerator: &LaurentPoly,
    denominator: &LaurentPoly,
    vars: &[&str],
    bound: u32,
) -> Result<TruncatedSeries> {
    let den = TruncatedSeries::from_poly(denominator, vars, bound)?;
    let inv = den.inverse().map_err(|_| Error::NonInvertibleConstant {
        denominator: denominator.to_string(),
    })?;
    Ok(TruncatedSeries::from_poly(numerator, vars, bound)?.mul(&inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::{c, v};

    #[test]
    fn geometric_series() {
        let s = series_expand(&c(1), &(c(1) - v("X")), &["X"], 3).unwrap();
        assert_eq!(s.to_poly(), c(1) + v("X") + v("X") * v("X") + v("X").pow(3).unwrap());
    }

    #[test]
    fn product_of_geometric_series() {
        let x = v("X");
        let den = (c(1) - &x) * (c(1) - &x * &x);
        let s = series_expand(&c(1), &den, &["X"], 2).unwrap();
        assert_eq!(s.to_poly(), c(1) + &x + c(2) * &x * &x);
    }

    #[test]
    fn non_invertible_constant_is_named() {
        let err = series_expand(&c(1), &v("X"), &["X"], 3).unwrap_err();
        assert_eq!(
            err,
            Error::NonInvertibleConstant {
                denominator: "X".into()
            }
        );
        // a sum of exact terms is not a unit either
        assert!(series_expand(&c(1), &(v("q") + c(1)), &["X"], 3).is_err());
    }

    #[test]
    fn laurent_unit_constant_term_inverts() {
        let den = v("q") - v("X");
        let s = series_expand(&c(1), &den, &["X"], 4).unwrap();
        let back = s.mul_poly(&den).unwrap();
        assert_eq!(back.to_poly(), c(1));
    }

    #[test]
    fn first_difference_reports_lowest_degree() {
        let a = TruncatedSeries::from_poly(&(c(1) + v("X") * c(2)), &["X"], 4).unwrap();
        let b = TruncatedSeries::from_poly(&(c(1) + v("X")), &["X"], 4).unwrap();
        let d = a.first_difference(&b).unwrap();
        assert_eq!(d.degree, 1);
        assert_eq!(d.left, c(2));
        assert_eq!(d.right, c(1));
    }
}
