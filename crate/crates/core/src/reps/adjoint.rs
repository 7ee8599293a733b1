//! The adjoint representation r of GL3 ⋊ Gal(E/F) on traceless 3x3 matrices.

use crate::algebra::{Ring, RingMatrix};
use crate::error::{Error, Result};
use crate::g2model::other_transpose;

/// Ordered basis E12, E13, E21, E23, E31, E32, H1 = E11-E22, H2 = E22-E33.
pub struct AdjointBasis;

pub const OFF_DIAGONAL: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
pub const BASIS_NAMES: [&str; 8] = ["E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2"];

impl AdjointBasis {
    pub const DIM: usize = 8;

    pub fn element<S: Ring>(k: usize) -> RingMatrix<S> {
        let mut m = RingMatrix::zeros(3, 3);
        match k {
            0..=5 => {
                let (i, j) = OFF_DIAGONAL[k];
                m.set(i, j, S::one());
            }
            6 => {
                m.set(0, 0, S::one());
                m.set(1, 1, S::one().neg());
            }
            7 => {
                m.set(1, 1, S::one());
                m.set(2, 2, S::one().neg());
            }
            _ => panic!("adjoint basis index {k} out of range"),
        }
        m
    }

    /// Coordinates of a traceless matrix.
    pub fn coordinates<S: Ring>(x: &RingMatrix<S>) -> Result<Vec<S>> {
        let trace = x.get(0, 0).add(x.get(1, 1)).add(x.get(2, 2));
        if !trace.is_zero() {
            return Err(Error::InvalidArgument("matrix is not traceless".into()));
        }
        let mut out: Vec<S> = OFF_DIAGONAL.iter().map(|&(i, j)| x.get(i, j).clone()).collect();
        out.push(x.get(0, 0).clone());
        out.push(x.get(2, 2).neg());
        Ok(out)
    }
}

/// Matrix of `X -> left X right` on the adjoint basis. The map must preserve
/// trace zero.
pub fn conjugation_matrix<S: Ring>(left: &RingMatrix<S>, right: &RingMatrix<S>) -> Result<RingMatrix<S>> {
    let mut cols = Vec::with_capacity(8);
    for k in 0..AdjointBasis::DIM {
        let img = left.mul(&AdjointBasis::element(k)).mul(right);
        cols.push(AdjointBasis::coordinates(&img)?);
    }
    Ok(RingMatrix::from_fn(8, 8, |i, j| cols[j][i].clone()))
}

/// `r(g)`: conjugation `X -> g X g^{-1}`.
pub fn r_matrix<S: Ring>(g: &RingMatrix<S>) -> Result<RingMatrix<S>> {
    if g.rows() != 3 || g.cols() != 3 {
        return Err(Error::NotSquare { rows: g.rows(), cols: g.cols() });
    }
    let ginv = g.inverse().map_err(|_| Error::Singular)?;
    conjugation_matrix(g, &ginv)
}

/// `r(Fr)`: `X -> _tX = J X^t J`.
pub fn r_fr<S: Ring>() -> RingMatrix<S> {
    let cols: Vec<Vec<S>> = (0..AdjointBasis::DIM)
        .map(|k| {
            AdjointBasis::coordinates(&other_transpose(&AdjointBasis::element::<S>(k)))
                .expect("_t preserves trace")
        })
        .collect();
    RingMatrix::from_fn(8, 8, |i, j| cols[j][i].clone())
}

/// `r'(Fr) = -r(Fr)`.
pub fn r_prime_fr<S: Ring>() -> RingMatrix<S> {
    r_fr::<S>().neg()
}

/// Image of `(g, Fr)`: `r(g) r(Fr)`.
pub fn r_fr_coset<S: Ring>(g: &RingMatrix<S>) -> Result<RingMatrix<S>> {
    Ok(r_matrix(g)?.mul(&r_fr()))
}
