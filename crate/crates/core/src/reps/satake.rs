//! Unramified Satake classes and the Fr-eigenspace decomposition.

use super::adjoint::{r_fr, r_fr_coset, r_matrix, r_prime_fr};
use super::characters::{ALPHA1, ALPHA2};
use crate::algebra::laurent::v;
use crate::algebra::{rat_frac, LaurentPoly, RingMatrix};
use crate::error::{Error, Result};

pub const MU: &str = "mu";

/// A semisimple class in `GL3(C) ⋊ Gal(E/F)`.
#[derive(Clone, Debug, PartialEq)]
pub enum SatakeClass {
    /// `diag(α1, α2, (α1α2)^{-1})` in the identity component.
    Split { alpha1: LaurentPoly, alpha2: LaurentPoly },
    /// `diag(μ, 1, μ^{-1}) · Fr`.
    NonSplit { mu: LaurentPoly },
}

fn require_unit(p: &LaurentPoly, what: &str) -> Result<()> {
    if p.is_unit() {
        Ok(())
    } else {
        Err(Error::NotAUnit(format!("{what} = {p}")))
    }
}

impl SatakeClass {
    pub fn split(alpha1: LaurentPoly, alpha2: LaurentPoly) -> Result<Self> {
        require_unit(&alpha1, "α1")?;
        require_unit(&alpha2, "α2")?;
        Ok(SatakeClass::Split { alpha1, alpha2 })
    }

    pub fn nonsplit(mu: LaurentPoly) -> Result<Self> {
        require_unit(&mu, "μ")?;
        Ok(SatakeClass::NonSplit { mu })
    }

    pub fn split_symbolic() -> Self {
        SatakeClass::Split {
            alpha1: v(ALPHA1),
            alpha2: v(ALPHA2),
        }
    }

    pub fn nonsplit_symbolic() -> Self {
        SatakeClass::NonSplit { mu: v(MU) }
    }

    pub fn split_trivial() -> Self {
        SatakeClass::Split {
            alpha1: LaurentPoly::one(),
            alpha2: LaurentPoly::one(),
        }
    }

    pub fn nonsplit_trivial() -> Self {
        SatakeClass::NonSplit { mu: LaurentPoly::one() }
    }

    pub fn is_split(&self) -> bool {
        matches!(self, SatakeClass::Split { .. })
    }

    /// The diagonal part `g` of the class.
    pub fn torus(&self) -> RingMatrix<LaurentPoly> {
        match self {
            SatakeClass::Split { alpha1, alpha2 } => {
                let a3 = (alpha1 * alpha2).inv().expect("units");
                RingMatrix::diagonal(&[alpha1.clone(), alpha2.clone(), a3])
            }
            SatakeClass::NonSplit { mu } => RingMatrix::diagonal(&[
                mu.clone(),
                LaurentPoly::one(),
                mu.inv().expect("unit"),
            ]),
        }
    }

    /// `r(g)` for split classes, `r(g) r(Fr)` otherwise.
    pub fn r_matrix(&self) -> Result<RingMatrix<LaurentPoly>> {
        let g = self.torus();
        if self.is_split() {
            r_matrix(&g)
        } else {
            r_fr_coset(&g)
        }
    }

    /// The same with the twisted action `Fr · X = -_tX`.
    pub fn r_prime_matrix(&self) -> Result<RingMatrix<LaurentPoly>> {
        let g = self.torus();
        if self.is_split() {
            r_matrix(&g)
        } else {
            Ok(r_matrix(&g)?.mul(&r_prime_fr()))
        }
    }
}

/// Eigenvalues of `r(diag(μ,1,μ^{-1}))` on the +1 and -1 eigenspaces of
/// `r(Fr)`, found with the projectors `(1 ± r(Fr))/2`.
pub fn fr_eigensplit(mu: &LaurentPoly) -> Result<(Vec<LaurentPoly>, Vec<LaurentPoly>)> {
    require_unit(mu, "μ")?;
    let g = RingMatrix::diagonal(&[mu.clone(), LaurentPoly::one(), mu.inv()?]);
    let r = r_matrix(&g)?;
    if !r.is_diagonal() {
        return Err(Error::Mismatch("torus action is not diagonal on the adjoint basis".into()));
    }
    let f = r_fr::<LaurentPoly>();
    let id = RingMatrix::identity(8);
    let half = LaurentPoly::constant(rat_frac(1, 2));
    let plus = id.add(&f).scale(&half);
    let minus = id.sub(&f).scale(&half);
    let collect = |proj: &RingMatrix<LaurentPoly>| {
        let mut chosen: Vec<Vec<LaurentPoly>> = Vec::new();
        let mut values = Vec::new();
        for k in 0..8 {
            let col = proj.col_vec(k);
            let mut trial = chosen.clone();
            trial.push(col.clone());
            let m = RingMatrix::from_fn(trial.len(), 8, |i, j| trial[i][j].clone());
            if m.rank() == trial.len() {
                chosen.push(col);
                // r commutes with the projector, so proj·e_k has eigenvalue r_kk
                values.push(r.get(k, k).clone());
            }
        }
        values
    };
    let mut p = collect(&plus);
    let mut m = collect(&minus);
    sort_by_mu_degree(&mut p);
    sort_by_mu_degree(&mut m);
    Ok((p, m))
}

fn sort_by_mu_degree(xs: &mut [LaurentPoly]) {
    xs.sort_by_key(|x| std::cmp::Reverse(x.terms().next().map(|(e, _)| e.iter().sum::<i32>()).unwrap_or(0)));
}
