//! The torus of SU(2,1) as 8x8 matrices in the parameters a, b.

use crate::algebra::laurent::v;
use crate::algebra::{FormalInverses, LaurentPoly, RingMatrix};

pub const NINV: &str = "Ninv";

/// The torus element for `a + b√ρ`, with `ninv` standing for `1/N`.
#[derive(Clone, Debug)]
pub struct TorusElement {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
    pub rho: LaurentPoly,
    pub ninv: LaurentPoly,
}

/// `a^2 - b^2 ρ`, the norm of `a + b√ρ`.
pub fn norm_form(a: &LaurentPoly, b: &LaurentPoly, rho: &LaurentPoly) -> LaurentPoly {
    a * a - b * b * rho
}

/// The printed variant `a^2 - b ρ^2`.
pub fn printed_norm_form(a: &LaurentPoly, b: &LaurentPoly, rho: &LaurentPoly) -> LaurentPoly {
    a * a - b * rho * rho
}

impl TorusElement {
    /// Symbols `a`, `b`, `rho`, `Ninv`.
    pub fn symbolic() -> Self {
        TorusElement {
            a: v("a"),
            b: v("b"),
            rho: v("rho"),
            ninv: v(NINV),
        }
    }

    pub fn norm(&self) -> LaurentPoly {
        norm_form(&self.a, &self.b, &self.rho)
    }

    /// Relation `Ninv = 1/N` for the symbolic element.
    pub fn inverses(&self) -> FormalInverses {
        FormalInverses::new().with(NINV, self.norm())
    }

    pub fn matrix(&self) -> RingMatrix<LaurentPoly> {
        let (a, b, r, ni) = (&self.a, &self.b, &self.rho, &self.ninv);
        let mut m = RingMatrix::zeros(8, 8);
        m.set(0, 0, a.clone());
        m.set(0, 1, -b);
        m.set(1, 0, -(b * r));
        m.set(1, 1, a.clone());
        let aa = a * a;
        let ab = a * b;
        let bb = b * b;
        let block = [
            [aa.clone(), -&ab, -&ab, -&bb],
            [-(&ab * r), aa.clone(), &bb * r, ab.clone()],
            [-(&ab * r), &bb * r, aa.clone(), ab.clone()],
            [-(&bb * r * r), &ab * r, &ab * r, aa.clone()],
        ];
        for (i, row) in block.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m.set(2 + i, 2 + j, x * ni);
            }
        }
        m.set(6, 6, a * ni);
        m.set(6, 7, b * ni);
        m.set(7, 6, b * r * ni);
        m.set(7, 7, a * ni);
        m
    }

    /// Parameters of `(a+b√ρ)(a'+b'√ρ)`; the inverse symbols multiply.
    pub fn compose(&self, other: &TorusElement) -> TorusElement {
        TorusElement {
            a: &self.a * &other.a + &self.b * &other.b * &self.rho,
            b: &self.a * &other.b + &other.a * &self.b,
            rho: self.rho.clone(),
            ninv: &self.ninv * &other.ninv,
        }
    }
}

/// Diagonal `t'` of the Iwasawa decomposition with pivot `p` (either `a` or
/// `bρ`): `(N/p, p, N/p², 1, 1, p²/N, 1/p, p/N)`. Returns `t'` and `t'^{-1}`.
pub fn iwasawa_torus(
    pivot: &LaurentPoly,
    norm: &LaurentPoly,
    ninv: &LaurentPoly,
) -> (RingMatrix<LaurentPoly>, RingMatrix<LaurentPoly>) {
    // (power of the pivot, power of N) per slot
    const EXPS: [(i32, i32); 8] = [(-1, 1), (1, 0), (-2, 1), (0, 0), (0, 0), (2, -1), (-1, 0), (1, -1)];
    let entry = |pe: i32, ne: i32| {
        let p = pivot.pow(pe).expect("the pivot is a Laurent unit");
        let n = if ne >= 0 {
            norm.pow(ne).expect("nonnegative power")
        } else {
            ninv.pow(-ne).expect("nonnegative power")
        };
        p * n
    };
    let t: Vec<LaurentPoly> = EXPS.iter().map(|&(p, n)| entry(p, n)).collect();
    let tinv: Vec<LaurentPoly> = EXPS.iter().map(|&(p, n)| entry(-p, -n)).collect();
    (RingMatrix::diagonal(&t), RingMatrix::diagonal(&tinv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::c;
    use crate::g2model::forms::{apply, j_defect, v0, v_rho, TrilinearForm};

    #[test]
    fn torus_matrix_invariants() {
        let t = TorusElement::symbolic();
        let inv = t.inverses();
        let m = t.matrix();
        assert!(inv.equal(&m.det().unwrap(), &c(1)));
        assert!(j_defect(&m, |x| inv.is_zero(x)).is_none());
        let form = TrilinearForm::standard();
        assert!(form.preservation_defect(&m, |x| inv.is_zero(x)).is_none());
        let vr = v_rho(&t.rho);
        let image = apply(&m, &vr);
        assert!(image.iter().zip(&vr).all(|(x, y)| inv.equal(x, y)));
        let z = v0::<LaurentPoly>();
        assert!(apply(&m, &z).iter().zip(&z).all(|(x, y)| inv.equal(x, y)));
    }

    #[test]
    fn printed_norm_breaks_determinant() {
        let t = TorusElement::symbolic();
        let wrong = FormalInverses::new().with(NINV, printed_norm_form(&t.a, &t.b, &t.rho));
        assert!(!wrong.equal(&t.matrix().det().unwrap(), &c(1)));
    }

    #[test]
    fn group_law() {
        let s = TorusElement::symbolic();
        let t = TorusElement {
            a: v("a2"),
            b: v("b2"),
            rho: v("rho"),
            ninv: v("Minv"),
        };
        let prod = s.compose(&t);
        assert_eq!(prod.norm(), s.norm() * t.norm());
        let inv = FormalInverses::new()
            .with(NINV, s.norm())
            .with("Minv", t.norm());
        let lhs = s.matrix().mul(&t.matrix());
        let rhs = prod.matrix();
        for (x, y) in lhs.entries().iter().zip(rhs.entries()) {
            assert!(inv.equal(x, y));
        }
    }

    #[test]
    fn iwasawa_torus_inverse() {
        let t = TorusElement::symbolic();
        let (d, dinv) = iwasawa_torus(&t.a, &t.norm(), &t.ninv);
        let inv = t.inverses();
        let prod = d.mul(&dinv);
        for i in 0..8 {
            assert!(inv.equal(prod.get(i, i), &c(1)));
        }
    }
}
