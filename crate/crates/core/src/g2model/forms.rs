//! The symmetric form J, the distinguished vectors v0 and v_rho, and the
//! alternating trilinear form T on F^8.

use crate::algebra::{RingMatrix, Ring};

pub const DIM: usize = 8;

/// Anti-diagonal matrix of ones.
pub fn j_matrix<S: Ring>() -> RingMatrix<S> {
    RingMatrix::from_fn(DIM, DIM, |i, j| if i + j == DIM - 1 { S::one() } else { S::zero() })
}

/// `<v, w> = v J w^t = Σ v_i w_{9-i}`.
pub fn pairing<S: Ring>(v: &[S], w: &[S]) -> S {
    assert_eq!(v.len(), DIM);
    assert_eq!(w.len(), DIM);
    (0..DIM).fold(S::zero(), |acc, i| acc.add(&v[i].mul(&w[DIM - 1 - i])))
}

/// `e4 - e5`.
pub fn v0<S: Ring>() -> Vec<S> {
    let mut v = vec![S::zero(); DIM];
    v[3] = S::one();
    v[4] = S::one().neg();
    v
}

/// `e3 + rho e6`.
pub fn v_rho<S: Ring>(rho: &S) -> Vec<S> {
    let mut v = vec![S::zero(); DIM];
    v[2] = S::one();
    v[5] = rho.clone();
    v
}

pub fn basis_vector<S: Ring>(i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); DIM];
    v[i] = S::one();
    v
}

pub fn apply<S: Ring>(m: &RingMatrix<S>, v: &[S]) -> Vec<S> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v)
                .fold(S::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
        })
        .collect()
}

/// `_tA = J A^t J`, the reflection across the anti-diagonal.
pub fn other_transpose<S: Ring>(a: &RingMatrix<S>) -> RingMatrix<S> {
    let n = a.rows();
    RingMatrix::from_fn(n, n, |i, j| a.get(n - 1 - j, n - 1 - i).clone())
}

/// First entry where `g J g^t` differs from `J`, under the given zero test.
pub fn j_defect<S: Ring>(
    g: &RingMatrix<S>,
    is_zero: impl Fn(&S) -> bool,
) -> Option<(usize, usize, S)> {
    let j = j_matrix::<S>();
    let lhs = g.mul(&j).mul(&g.transpose());
    first_nonzero(&lhs.sub(&j), is_zero)
}

/// First entry where `X J + J X^t` is nonzero.
pub fn so8_defect<S: Ring>(
    x: &RingMatrix<S>,
    is_zero: impl Fn(&S) -> bool,
) -> Option<(usize, usize, S)> {
    let j = j_matrix::<S>();
    first_nonzero(&x.mul(&j).add(&j.mul(&x.transpose())), is_zero)
}

pub fn first_nonzero<S: Ring>(
    m: &RingMatrix<S>,
    is_zero: impl Fn(&S) -> bool,
) -> Option<(usize, usize, S)> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !is_zero(m.get(i, j)) {
                return Some((i, j, m.get(i, j).clone()));
            }
        }
    }
    None
}

/// A fully antisymmetric integer tensor on F^8.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrilinearForm {
    dense: Vec<i64>,
    support: Vec<(usize, usize, usize, i64)>,
}

fn idx(i: usize, j: usize, k: usize) -> usize {
    (i * DIM + j) * DIM + k
}

impl TrilinearForm {
    /// Sum of `coeff * f1 ∧ f2 ∧ f3` over the given terms, where each `f` is a
    /// linear functional and the wedge is the 3x3 determinant of values.
    pub fn from_wedges(terms: &[(i64, [&[i64]; 3])]) -> Self {
        let mut dense = vec![0i64; DIM * DIM * DIM];
        const PERMS: [([usize; 3], i64); 6] = [
            ([0, 1, 2], 1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([0, 2, 1], -1),
            ([2, 1, 0], -1),
            ([1, 0, 2], -1),
        ];
        for (coeff, fs) in terms {
            for i in 0..DIM {
                for j in 0..DIM {
                    for k in 0..DIM {
                        let mut s = 0;
                        for (p, sign) in PERMS {
                            s += sign * fs[p[0]][i] * fs[p[1]][j] * fs[p[2]][k];
                        }
                        dense[idx(i, j, k)] += coeff * s;
                    }
                }
            }
        }
        let mut support = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let c = dense[idx(i, j, k)];
                    if c != 0 {
                        support.push((i, j, k, c));
                    }
                }
            }
        }
        TrilinearForm { dense, support }
    }

    /// `e7*∧(e4*+e5*)∧e2* + e1*∧(e4*+e5*)∧e8* + e6*∧(e4*+e5*)∧e3*
    ///  + 2 e3*∧e2*∧e8* - 2 e6*∧e7*∧e1*`.
    pub fn standard() -> Self {
        fn e(n: usize) -> [i64; DIM] {
            let mut v = [0; DIM];
            v[n - 1] = 1;
            v
        }
        let mut f45 = [0; DIM];
        f45[3] = 1;
        f45[4] = 1;
        let (e1, e2, e3, e6, e7, e8) = (e(1), e(2), e(3), e(6), e(7), e(8));
        Self::from_wedges(&[
            (1, [&e7, &f45, &e2]),
            (1, [&e1, &f45, &e8]),
            (1, [&e6, &f45, &e3]),
            (2, [&e3, &e2, &e8]),
            (-2, [&e6, &e7, &e1]),
        ])
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> i64 {
        self.dense[idx(i, j, k)]
    }

    /// Nonzero entries `(i, j, k, T_ijk)`, 0-based.
    pub fn support(&self) -> &[(usize, usize, usize, i64)] {
        &self.support
    }

    pub fn is_alternating(&self) -> bool {
        (0..DIM).all(|i| {
            (0..DIM).all(|j| {
                (0..DIM).all(|k| {
                    let t = self.entry(i, j, k);
                    t == -self.entry(j, i, k)
                        && t == -self.entry(i, k, j)
                        && t == -self.entry(k, j, i)
                })
            })
        })
    }

    pub fn eval<S: Ring>(&self, u: &[S], v: &[S], w: &[S]) -> S {
        self.support.iter().fold(S::zero(), |acc, &(i, j, k, c)| {
            let t = u[i].mul(&v[j]).mul(&w[k]);
            if t.is_zero() {
                acc
            } else {
                acc.add(&t.mul(&S::from_i64(c)))
            }
        })
    }

    /// First basis triple `i<j<k` with `T(Xe_i,e_j,e_k)+T(e_i,Xe_j,e_k)+T(e_i,e_j,Xe_k) != 0`.
    pub fn derivation_defect<S: Ring>(
        &self,
        x: &RingMatrix<S>,
        is_zero: impl Fn(&S) -> bool,
    ) -> Option<((usize, usize, usize), S)> {
        for (i, j, k) in triples() {
            let mut s = S::zero();
            for p in 0..DIM {
                for (c, xp) in [
                    (self.entry(p, j, k), x.get(p, i)),
                    (self.entry(i, p, k), x.get(p, j)),
                    (self.entry(i, j, p), x.get(p, k)),
                ] {
                    if c != 0 && !xp.is_zero() {
                        s = s.add(&xp.mul(&S::from_i64(c)));
                    }
                }
            }
            if !is_zero(&s) {
                return Some(((i, j, k), s));
            }
        }
        None
    }

    /// First basis triple `i<j<k` with `T(ge_i,ge_j,ge_k) != T(e_i,e_j,e_k)`.
    pub fn preservation_defect<S: Ring>(
        &self,
        g: &RingMatrix<S>,
        is_zero: impl Fn(&S) -> bool,
    ) -> Option<((usize, usize, usize), S)> {
        for (i, j, k) in triples() {
            let mut s = S::from_i64(-self.entry(i, j, k));
            for &(p, q, r, c) in &self.support {
                let (a, b, d) = (g.get(p, i), g.get(q, j), g.get(r, k));
                if a.is_zero() || b.is_zero() || d.is_zero() {
                    continue;
                }
                s = s.add(&a.mul(b).mul(d).mul(&S::from_i64(c)));
            }
            if !is_zero(&s) {
                return Some(((i, j, k), s));
            }
        }
        None
    }
}

fn triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..DIM).flat_map(|i| ((i + 1)..DIM).flat_map(move |j| ((j + 1)..DIM).map(move |k| (i, j, k))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::{c, v};
    use crate::algebra::{rat, LaurentPoly, Rational};

    #[test]
    fn standard_form_shape() {
        let t = TrilinearForm::standard();
        assert!(t.is_alternating());
        assert_eq!(t.support().len(), 48);
        // e7*∧e4*∧e2* contributes T(7,4,2) = 1
        assert_eq!(t.entry(6, 3, 1), 1);
        assert_eq!(t.entry(2, 1, 7), 2);
        assert_eq!(t.entry(5, 6, 0), -2);
        assert_eq!(t.entry(0, 1, 2), 0);
    }

    #[test]
    fn t_kills_v0_with_paired_complement() {
        // T(v0, ., .) vanishes since T only sees e4*+e5*.
        let t = TrilinearForm::standard();
        let z = v0::<Rational>();
        for i in 0..DIM {
            for j in 0..DIM {
                let ei = basis_vector::<Rational>(i);
                let ej = basis_vector::<Rational>(j);
                assert_eq!(t.eval(&z, &ei, &ej), rat(0));
            }
        }
    }

    #[test]
    fn norms_of_distinguished_vectors() {
        assert_eq!(pairing(&v0::<Rational>(), &v0()), rat(-2));
        let rho = v("rho");
        let vr = v_rho(&rho);
        assert_eq!(pairing(&vr, &vr), c(2) * rho.clone());
        assert_eq!(pairing(&v0::<LaurentPoly>(), &vr), c(0));
    }

    #[test]
    fn other_transpose_is_jatj() {
        let a = RingMatrix::from_fn(3, 3, |i, j| rat((3 * i + j) as i64));
        let j3 = RingMatrix::from_fn(3, 3, |i, j| if i + j == 2 { rat(1) } else { rat(0) });
        assert_eq!(other_transpose(&a), j3.mul(&a.transpose()).mul(&j3));
    }

    #[test]
    fn identity_preserves_everything() {
        let g = RingMatrix::<Rational>::identity(DIM);
        assert!(j_defect(&g, |x| x == &rat(0)).is_none());
        let t = TrilinearForm::standard();
        assert!(t.preservation_defect(&g, |x| x == &rat(0)).is_none());
        assert!(t
            .derivation_defect(&RingMatrix::<Rational>::zeros(DIM, DIM), |x| x == &rat(0))
            .is_none());
    }
}
