//! The G2 and SU(2,1) Lie algebra models and their verification.

use super::display::{
    direction, g2_symbolic, parse_entry, su21_symbolic, G2_PARAMS, SU21_PARAMS,
    SU21_SUBSTITUTION,
};
use super::forms::{apply, basis_vector, pairing, so8_defect, v0, v_rho, TrilinearForm};
use crate::algebra::laurent::{c, v};
use crate::algebra::{rat_frac, LaurentPoly, Rational, Ring, RingMatrix};
use crate::errata;
use crate::error::Result;
use crate::report::VerificationReport;

/// An element of the G2 display with the parameters in `G2_PARAMS` order.
#[derive(Clone, Debug, PartialEq)]
pub struct G2AlgebraElement<S> {
    pub params: [S; 14],
}

/// An element of the SU(2,1) display with the parameters in `SU21_PARAMS`
/// order and the field parameter `rho`.
#[derive(Clone, Debug, PartialEq)]
pub struct SU21AlgebraElement<S> {
    pub params: [S; 8],
    pub rho: S,
}

fn evaluate<S: Ring>(sym: &RingMatrix<LaurentPoly>, names: &[&str], values: &[S]) -> RingMatrix<S> {
    sym.map(|p| {
        p.terms().fold(S::zero(), |acc, (e, coeff)| {
            let mut t = S::from_rational(coeff).expect("integer coefficients");
            for (var, &k) in p.vars().iter().zip(e) {
                if k == 0 {
                    continue;
                }
                let idx = names.iter().position(|n| n == var).expect("known parameter");
                t = t.mul(&values[idx].pow(k as u32));
            }
            acc.add(&t)
        })
    })
}

impl<S: Ring> G2AlgebraElement<S> {
    pub fn matrix(&self) -> RingMatrix<S> {
        evaluate(&g2_symbolic(), &G2_PARAMS, &self.params)
    }
}

impl G2AlgebraElement<LaurentPoly> {
    pub fn symbolic() -> Self {
        G2AlgebraElement {
            params: G2_PARAMS.map(v),
        }
    }
}

impl<S: Ring> SU21AlgebraElement<S> {
    pub fn matrix(&self) -> RingMatrix<S> {
        let mut names = SU21_PARAMS.to_vec();
        names.push("rho");
        let mut values = self.params.to_vec();
        values.push(self.rho.clone());
        evaluate(&su21_symbolic(), &names, &values)
    }
}

impl SU21AlgebraElement<LaurentPoly> {
    pub fn symbolic() -> Self {
        SU21AlgebraElement {
            params: SU21_PARAMS.map(v),
            rho: v("rho"),
        }
    }
}

fn flatten(ms: &[RingMatrix<LaurentPoly>]) -> RingMatrix<LaurentPoly> {
    RingMatrix::from_fn(ms.len(), 64, |r, k| ms[r].get(k / 8, k % 8).clone())
}

/// Every pairwise bracket of `basis` stays in its span; returns the span
/// dimension and the first pair that escapes.
fn bracket_closure(
    basis: &[RingMatrix<LaurentPoly>],
    names: &[&str],
) -> (usize, Option<(String, String)>) {
    let rank = flatten(basis).rank();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let mut ext = basis.to_vec();
            ext.push(basis[i].bracket(&basis[j]));
            if flatten(&ext).rank() != rank {
                return (rank, Some((names[i].to_string(), names[j].to_string())));
            }
        }
    }
    (rank, None)
}

fn fmt_entry((i, j, x): (usize, usize, LaurentPoly)) -> String {
    format!("entry ({},{}) = {}", i + 1, j + 1, x)
}

fn fmt_triple(((i, j, k), x): ((usize, usize, usize), LaurentPoly)) -> String {
    format!("triple ({},{},{}) gives {}", i + 1, j + 1, k + 1, x)
}

/// Linear map `E^3 -> F^8` of the basis identification, on the F-basis
/// (1,0,0), (τ,0,0), (0,1,0), (0,τ,0), (0,0,1), (0,0,τ).
pub fn remark_basis(rho: &LaurentPoly) -> Vec<Vec<LaurentPoly>> {
    let e = |n: usize| basis_vector::<LaurentPoly>(n - 1);
    let lin = |terms: &[(Rational, usize)], scale: &LaurentPoly| {
        let mut out = vec![LaurentPoly::zero(); 8];
        for (coef, n) in terms {
            out[n - 1] = out[n - 1].clone() + LaurentPoly::constant(coef.clone()) * scale.clone();
        }
        out
    };
    let one = c(1);
    let half = rat_frac(1, 2);
    let mhalf = rat_frac(-1, 2);
    vec![
        e(1),
        lin(&[(rat_frac(-1, 1), 2)], rho),
        lin(&[(mhalf.clone(), 4), (mhalf.clone(), 5)], &one),
        {
            let mut w = lin(&[(mhalf, 3)], &one);
            w[5] = rho.clone() * LaurentPoly::constant(half.clone());
            w
        },
        lin(&[(half.clone(), 8)], &one),
        lin(&[(half, 7)], &one),
    ]
}

/// Coordinates in the basis of [`remark_basis`] of a vector in its span.
fn remark_coordinates(w: &[LaurentPoly], rho: &LaurentPoly) -> Result<Vec<LaurentPoly>> {
    let two = c(2);
    Ok(vec![
        w[0].clone(),
        -(w[1].div_exact(rho)?),
        -(two.clone() * w[3].clone()),
        -(two.clone() * w[2].clone()),
        two.clone() * w[7].clone(),
        two * w[6].clone(),
    ])
}

/// Checks the identification of the v0, v_rho complement with E^3: the SU(2,1)
/// display acts E-linearly and its 3x3 matrix over E is traceless and
/// skew-Hermitian for the anti-diagonal form.
fn check_remark(report: &mut VerificationReport) -> Result<()> {
    let rho = v("rho");
    let basis = remark_basis(&rho);
    let z = v0::<LaurentPoly>();
    let vr = v_rho(&rho);
    let orth = basis
        .iter()
        .all(|b| pairing(b, &z).is_zero() && pairing(b, &vr).is_zero());
    report.check(
        "remark-basis-orthogonal",
        orth,
        "the six identified vectors are J-orthogonal to v0 and v_rho",
        || None,
    );
    let x = SU21AlgebraElement::symbolic().matrix();
    let mut cols = Vec::new();
    for b in &basis {
        let img = apply(&x, b);
        let coords = remark_coordinates(&img, &rho)?;
        let back = basis
            .iter()
            .zip(&coords)
            .fold(vec![LaurentPoly::zero(); 8], |acc, (bv, cf)| {
                acc.iter().zip(bv).map(|(a, y)| a.clone() + y.clone() * cf.clone()).collect()
            });
        if back != img {
            report.fail("remark-invariant-subspace", "X maps the complement into itself", None);
            return Ok(());
        }
        cols.push(coords);
    }
    report.pass("remark-invariant-subspace", "X maps the six-dimensional complement into itself");
    let m = RingMatrix::from_fn(6, 6, |i, j| cols[j][i].clone());
    // multiplication by τ on the F-basis
    let tau = RingMatrix::from_fn(6, 6, |i, j| {
        if i % 2 == 1 && j == i - 1 {
            c(1)
        } else if i % 2 == 0 && j == i + 1 {
            rho.clone()
        } else {
            c(0)
        }
    });
    let linear = m.mul(&tau) == tau.mul(&m);
    report.check(
        "remark-e-linear",
        linear,
        "the action commutes with multiplication by τ",
        || None,
    );
    let a = |r: usize, s: usize| -> (LaurentPoly, LaurentPoly) { (m.get(2 * r, 2 * s).clone(), m.get(2 * r + 1, 2 * s).clone()) };
    let trace = (0..3).fold((c(0), c(0)), |acc, r| {
        let d = a(r, r);
        (acc.0 + d.0, acc.1 + d.1)
    });
    // (A J + J conj(A)^t)_{rs} = A_{r,2-s} + conj(A_{s,2-r})
    let mut herm_ok = true;
    for r in 0..3 {
        for s in 0..3 {
            let lhs = a(r, 2 - s);
            let rhs = a(s, 2 - r);
            let sum = (lhs.0 + rhs.0.clone(), lhs.1 - rhs.1);
            herm_ok &= sum.0.is_zero() && sum.1.is_zero();
        }
    }
    report.check(
        "remark-su-j",
        herm_ok && trace.0.is_zero() && trace.1.is_zero(),
        "the 3x3 matrix over E is traceless and satisfies A J + J conj(A)^t = 0",
        || None,
    );
    Ok(())
}

/// The so8, T-derivation, bracket-closure, and stabilizer checks for both displays.
pub fn verify_lie_models() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lie");
    let t = TrilinearForm::standard();
    let zero = LaurentPoly::is_zero;
    report.check(
        "trilinear-form-alternating",
        t.is_alternating() && t.support().len() == 48,
        "T is alternating with 48 nonzero ordered entries",
        || None,
    );

    let g2 = G2AlgebraElement::symbolic().matrix();
    let d = so8_defect(&g2, zero);
    report.check(
        "g2-so8",
        d.is_none(),
        "X J + J X^t = 0 identically in 14 parameters",
        || d.map(fmt_entry),
    );
    let d = t.derivation_defect(&g2, zero);
    report.check(
        "g2-derivation",
        d.is_none(),
        "X is a derivation of T on all basis triples",
        || d.map(fmt_triple),
    );
    let kills_v0 = apply(&g2, &v0()).iter().all(LaurentPoly::is_zero);
    report.check("g2-kills-v0", kills_v0, "X v0 = 0, so X preserves V0", || None);

    let g2_basis: Vec<_> = G2_PARAMS.iter().map(|p| direction(&g2, &G2_PARAMS, p)).collect();
    let (rank, escape) = bracket_closure(&g2_basis, &G2_PARAMS);
    report.check(
        "g2-bracket-closure",
        rank == 14 && escape.is_none(),
        format!("the 14 directions span dimension {rank} and are closed under bracket"),
        || escape.map(|(a, b)| format!("[{a},{b}] leaves the span")),
    );

    let diag_j = RingMatrix::<LaurentPoly>::identity(8);
    let diag_ok = g2.mul(&diag_j).add(&diag_j.mul(&g2.transpose())).is_zero();
    report.check(
        "j-anti-diagonal",
        !diag_ok,
        "the display is skew for the anti-diagonal J and not for the identity matrix",
        || None,
    );
    report.typo(errata::bilinear_form_shape());

    let su = SU21AlgebraElement::symbolic().matrix();
    let subs: Vec<(&str, LaurentPoly)> =
        SU21_SUBSTITUTION.iter().map(|(n, e)| (*n, parse_entry(e))).collect();
    let specialized = g2.substitute(&subs)?;
    let diff = specialized.first_difference(&su);
    report.check(
        "su21-is-g2-specialization",
        diff.is_none(),
        "T2=2T1, b=-ρd, c=-ρe, g=ρa, i=-ρl, j=-ρh carries the G2 display to the SU(2,1) display",
        || diff.map(|d| format!("entry ({},{}): {} vs {}", d.row + 1, d.col + 1, d.left, d.right)),
    );
    let d = so8_defect(&su, zero);
    report.check("su21-so8", d.is_none(), "the SU(2,1) display is skew for J", || d.map(fmt_entry));
    let d = t.derivation_defect(&su, zero);
    report.check(
        "su21-derivation",
        d.is_none(),
        "the SU(2,1) display is a derivation of T in 8 parameters and ρ",
        || d.map(fmt_triple),
    );
    let rho = v("rho");
    let kills = apply(&su, &v_rho(&rho));
    report.check(
        "su21-kills-v-rho",
        kills.iter().all(LaurentPoly::is_zero),
        "X v_rho = 0",
        || None,
    );
    let su_basis: Vec<_> = SU21_PARAMS.iter().map(|p| direction(&su, &SU21_PARAMS, p)).collect();
    let (rank, escape) = bracket_closure(&su_basis, &SU21_PARAMS);
    report.check(
        "su21-bracket-closure",
        rank == 8 && escape.is_none(),
        format!("the 8 directions span dimension {rank} and are closed under bracket"),
        || escape.map(|(a, b)| format!("[{a},{b}] leaves the span")),
    );

    // X v_rho = 0 as 8 linear equations in the 14 G2 parameters.
    let xv = apply(&g2, &v_rho(&rho));
    let system = RingMatrix::from_fn(8, 14, |r, p| {
        xv[r].coefficient(&[G2_PARAMS[p]], &[1])
    });
    let annihilator_dim = 14 - system.rank();
    let su_in_kernel = SU21_PARAMS.iter().all(|name| {
        let indicator: Vec<(&str, LaurentPoly)> = SU21_PARAMS
            .iter()
            .map(|p| (*p, LaurentPoly::int(i64::from(p == name))))
            .collect();
        let dir: Vec<LaurentPoly> = G2_PARAMS
            .iter()
            .map(|p| {
                specialize_param(p, &subs)
                    .substitute(&indicator)
                    .expect("polynomial substitution")
            })
            .collect();
        (0..8).all(|r| {
            (0..14)
                .fold(LaurentPoly::zero(), |acc, p| acc + system.get(r, p).clone() * dir[p].clone())
                .is_zero()
        })
    });
    report.check(
        "su21-is-full-annihilator",
        annihilator_dim == 8 && su_in_kernel && rank == 8,
        format!(
            "{{X in g2 : X v_rho = 0}} has dimension {annihilator_dim} and contains the 8-dimensional SU(2,1) display"
        ),
        || None,
    );

    check_remark(&mut report)?;

    let ee = direction(&su, &SU21_PARAMS, "e");
    let ef = direction(&su, &SU21_PARAMS, "f");
    let n2_ok = ee.bracket(&ef).is_zero()
        && ee.pow(8).is_zero()
        && ef.pow(8).is_zero()
        && flatten(&[ee.clone(), ef.clone()]).rank() == 2
        && apply(&ee, &v_rho(&rho)).iter().all(LaurentPoly::is_zero)
        && apply(&ef, &v_rho(&rho)).iter().all(LaurentPoly::is_zero);
    report.check(
        "n2-abelian",
        n2_ok,
        "the e and f directions are commuting nilpotents spanning a 2-dimensional algebra killing v_rho",
        || None,
    );
    Ok(report)
}

fn specialize_param(p: &str, subs: &[(&str, LaurentPoly)]) -> LaurentPoly {
    subs.iter()
        .find(|(n, _)| *n == p)
        .map(|(_, e)| e.clone())
        .unwrap_or_else(|| v(p))
}
