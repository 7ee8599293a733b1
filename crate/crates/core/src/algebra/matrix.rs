use std::fmt;

use super::{LaurentPoly, Rational, Ring};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact commutative ring.
#[derive(Clone, Debug, PartialEq)]
pub struct RingMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

/// Position and values of the first entry where two matrices differ.
#[derive(Clone, Debug, PartialEq)]
pub struct EntryDiff<S> {
    pub row: usize,
    pub col: usize,
    pub left: S,
    pub right: S,
}

impl<S: Ring> RingMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(RingMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, data }
    }

    pub fn diagonal(entries: &[S]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Column vector.
    pub fn column(entries: &[S]) -> Self {
        RingMatrix {
            rows: entries.len(),
            cols: 1,
            data: entries.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col_vec(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<T: Ring>(&self, f: impl FnMut(&S) -> T) -> RingMatrix<T> {
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: Ring>(&self, f: impl FnMut(&S) -> Result<T>) -> Result<RingMatrix<T>> {
        Ok(RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(S::neg)
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.mul(s))
    }

    /// Matrix product; panics on a dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix product of {}x{} and {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    /// `[self, other] = self*other - other*self`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..=i).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.transpose().is_upper_unitriangular()
    }

    /// First entry (row-major) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<EntryDiff<S>> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        (0..self.rows * self.cols)
            .find(|&k| self.data[k] != other.data[k])
            .map(|k| EntryDiff {
                row: k / self.cols,
                col: k % self.cols,
                left: self.data[k].clone(),
                right: other.data[k].clone(),
            })
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<S> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(S::one());
        }
        let mut m: Vec<Vec<S>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = S::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(S::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss quotients are exact over an integral domain");
                }
                m[i][k] = S::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Rank over the fraction field, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<S>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        let mut prev = S::one();
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for i in rank + 1..self.rows {
                for j in col + 1..self.cols {
                    let num = m[i][j].mul(&m[rank][col]).sub(&m[i][col].mul(&m[rank][j]));
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("fraction-free elimination quotients are exact");
                }
                m[i][col] = S::zero();
            }
            prev = m[rank][col].clone();
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Submatrix with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let rows: Vec<Vec<S>> = (0..self.rows)
            .filter(|&i| i != r)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| j != c)
                    .map(|j| self.get(i, j).clone())
                    .collect()
            })
            .collect();
        Self::from_rows(rows).unwrap_or_else(|_| Self::zeros(0, 0))
    }

    pub fn adjugate(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut adj = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let d = self.minor(j, i).det()?;
                adj.set(i, j, if (i + j) % 2 == 0 { d } else { d.neg() });
            }
        }
        Ok(adj)
    }

    /// Inverse; the determinant must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det()?;
        let inv = det.inv().ok_or(Error::Singular)?;
        Ok(self.adjugate()?.scale(&inv))
    }

    /// Block-diagonal matrix with `self` then `other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Self::from_fn(r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                S::zero()
            }
        })
    }
}

impl RingMatrix<Rational> {
    pub fn to_laurent(&self) -> RingMatrix<LaurentPoly> {
        self.map(|r| LaurentPoly::constant(r.clone()))
    }
}

impl RingMatrix<LaurentPoly> {
    /// `det(var * Id - self)`.
    pub fn charpoly(&self, var: &str) -> Result<LaurentPoly> {
        self.require_square()?;
        let t = LaurentPoly::var(var);
        let n = self.rows;
        let m = Self::from_fn(n, n, |i, j| {
            if i == j {
                &t - self.get(i, j)
            } else {
                -self.get(i, j)
            }
        });
        m.det()
    }

    pub fn substitute(&self, subs: &[(&str, LaurentPoly)]) -> Result<Self> {
        self.try_map(|p| p.substitute(subs))
    }
}

impl<S: Ring + fmt::Display> RingMatrix<S> {
    /// Row-major text: one line per row, entries separated by ` | `.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" | ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Row-major array of entry strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::{c, v};
    use crate::algebra::rat;

    fn lp(rows: Vec<Vec<LaurentPoly>>) -> RingMatrix<LaurentPoly> {
        RingMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn identity_det() {
        assert_eq!(RingMatrix::<Rational>::identity(8).det().unwrap(), rat(1));
    }

    #[test]
    fn diagonal_det() {
        let m = RingMatrix::diagonal(&[v("a1"), v("a2"), v("a3")]);
        assert_eq!(m.det().unwrap(), v("a1") * v("a2") * v("a3"));
    }

    #[test]
    fn norm_form_det() {
        let (a, b, rho) = (v("a"), v("b"), v("rho"));
        let m = lp(vec![vec![a.clone(), b.clone()], vec![&b * &rho, a.clone()]]);
        assert_eq!(m.det().unwrap(), &a * &a - &b * &b * &rho);
    }

    #[test]
    fn det_needs_pivoting() {
        let m = lp(vec![
            vec![c(0), c(1), c(0)],
            vec![c(1), c(0), c(0)],
            vec![c(0), c(0), v("t")],
        ]);
        assert_eq!(m.det().unwrap(), -v("t"));
    }

    #[test]
    fn non_square_errors() {
        let m = RingMatrix::<Rational>::zeros(2, 3);
        assert!(matches!(m.det(), Err(Error::NotSquare { .. })));
        assert!(m.to_laurent().charpoly("t").is_err());
    }

    #[test]
    fn charpoly_examples() {
        let id = RingMatrix::<LaurentPoly>::identity(2);
        let t = v("t");
        assert_eq!(id.charpoly("t").unwrap(), (&t - c(1)) * (&t - c(1)));
        let mu = v("mu");
        let m = RingMatrix::diagonal(&[mu.clone(), mu.inv().unwrap()]);
        assert_eq!(
            m.charpoly("t").unwrap(),
            &t * &t - (&mu + mu.inv().unwrap()) * &t + c(1)
        );
    }

    #[test]
    fn rank_over_fraction_field() {
        let rho = v("rho");
        let m = lp(vec![
            vec![c(1), rho.clone(), c(0)],
            vec![rho.clone(), &rho * &rho, c(0)],
            vec![c(0), c(0), c(0)],
        ]);
        assert_eq!(m.rank(), 1);
        assert_eq!(RingMatrix::<LaurentPoly>::identity(4).rank(), 4);
    }

    #[test]
    fn inverse_of_unimodular() {
        let m = lp(vec![vec![c(1), v("u")], vec![c(0), c(1)]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
    }
}
