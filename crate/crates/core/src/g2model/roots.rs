//! Roots of G2, root subgroups, Weyl representatives, and the parabolic P.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use super::display::{direction, g2_symbolic, G2_PARAMS};
use crate::algebra::{factorial, LaurentPoly, Rational, Ring, RingMatrix};
use crate::error::{Error, Result};

/// `c1 α1 + c2 α2` with α1 short and α2 long.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root {
    pub c1: i32,
    pub c2: i32,
}

const POSITIVE: [(i32, i32); 6] = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)];

impl Root {
    pub const ALPHA1: Root = Root { c1: 1, c2: 0 };
    pub const ALPHA2: Root = Root { c1: 0, c2: 1 };

    pub fn new(c1: i32, c2: i32) -> Result<Root> {
        let r = Root { c1, c2 };
        if Root::all().contains(&r) {
            Ok(r)
        } else {
            Err(Error::InvalidArgument(format!("{c1}α1+{c2}α2 is not a root of G2")))
        }
    }

    /// Positive roots in order of height, then their negatives.
    pub fn all() -> [Root; 12] {
        let mut out = [Root { c1: 0, c2: 0 }; 12];
        for (n, (c1, c2)) in POSITIVE.iter().enumerate() {
            out[n] = Root { c1: *c1, c2: *c2 };
            out[n + 6] = Root { c1: -c1, c2: -c2 };
        }
        out
    }

    pub fn neg(self) -> Root {
        Root {
            c1: -self.c1,
            c2: -self.c2,
        }
    }

    /// The sum when it is again a root.
    pub fn plus(self, other: Root) -> Option<Root> {
        Root::new(self.c1 + other.c1, self.c2 + other.c2).ok()
    }

    pub fn is_positive(self) -> bool {
        self.c1 >= 0 && self.c2 >= 0
    }

    pub fn is_simple(self) -> bool {
        self == Root::ALPHA1 || self == Root::ALPHA2
    }

    pub fn is_long(self) -> bool {
        matches!(self.c1.abs(), 0 | 3)
    }

    /// Roots of P: the positive roots together with -α1.
    pub fn in_parabolic(self) -> bool {
        self.is_positive() || self == Root::ALPHA1.neg()
    }

    /// Simple reflection `s_simple` applied to this root.
    pub fn reflect(self, simple: Root) -> Result<Root> {
        if simple == Root::ALPHA1 {
            Ok(Root {
                c1: 3 * self.c2 - self.c1,
                c2: self.c2,
            })
        } else if simple == Root::ALPHA2 {
            Ok(Root {
                c1: self.c1,
                c2: self.c1 - self.c2,
            })
        } else {
            Err(Error::NotSimpleRoot(simple.to_string()))
        }
    }

    /// Display parameter whose direction spans this root space.
    pub fn param(self) -> &'static str {
        datum().param_of(self)
    }

    pub fn from_param(name: &str) -> Option<Root> {
        datum().entries.iter().find(|e| e.param == name).map(|e| e.root)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |c: i32, name: &str| match c {
            0 => String::new(),
            1 => name.to_string(),
            -1 => format!("-{name}"),
            c => format!("{c}{name}"),
        };
        let (a, b) = (part(self.c1, "α1"), part(self.c2, "α2"));
        match (a.is_empty(), b.is_empty()) {
            (true, _) => write!(f, "{b}"),
            (_, true) => write!(f, "{a}"),
            _ if b.starts_with('-') => write!(f, "{a}{b}"),
            _ => write!(f, "{a}+{b}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootEntry {
    pub root: Root,
    pub param: &'static str,
    pub matrix: RingMatrix<Rational>,
    /// `E^k / k!` for `k = 0, 1, ...` up to the last nonzero power.
    exp_terms: Vec<RingMatrix<Rational>>,
}

/// The twelve root directions of the G2 display, with roots read off from
/// the torus weights.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub entries: Vec<RootEntry>,
}

fn to_rational(m: &RingMatrix<LaurentPoly>) -> RingMatrix<Rational> {
    m.map(|p| {
        assert!(p.is_constant());
        p.constant_term()
    })
}

impl RootDatum {
    fn compute() -> Result<RootDatum> {
        let g2 = g2_symbolic();
        let off_torus: Vec<&str> = G2_PARAMS.iter().copied().filter(|p| !p.starts_with('T')).collect();
        let zero_roots: Vec<(&str, LaurentPoly)> =
            off_torus.iter().map(|p| (*p, LaurentPoly::zero())).collect();
        let h = g2.substitute(&zero_roots)?;
        let mut entries = Vec::new();
        for p in off_torus {
            let e = to_rational(&direction(&g2, &G2_PARAMS, p));
            let el = e.to_laurent();
            let br = h.bracket(&el);
            let (i, j) = (0..64)
                .map(|k| (k / 8, k % 8))
                .find(|&(i, j)| !Ring::is_zero(e.get(i, j)))
                .expect("nonzero direction");
            let weight = br.get(i, j).div_exact(el.get(i, j))?;
            if br != el.scale(&weight) {
                return Err(Error::Mismatch(format!("direction {p} is not a torus weight vector")));
            }
            let x = weight.coefficient(&["T1", "T2"], &[1, 0]).constant_term();
            let y = weight.coefficient(&["T1", "T2"], &[0, 1]).constant_term();
            let (x, y) = (rational_to_i32(&x)?, rational_to_i32(&y)?);
            let root = Root::new(2 * x + 3 * y, x + 2 * y)?;
            let mut exp_terms = vec![RingMatrix::identity(8)];
            let mut power = RingMatrix::identity(8);
            for k in 1.. {
                power = power.mul(&e);
                if power.is_zero() {
                    break;
                }
                exp_terms.push(power.scale(&factorial(k).recip()));
            }
            entries.push(RootEntry {
                root,
                param: p,
                matrix: e,
                exp_terms,
            });
        }
        Ok(RootDatum { entries })
    }

    pub fn entry(&self, root: Root) -> &RootEntry {
        self.entries
            .iter()
            .find(|e| e.root == root)
            .expect("every root has a direction")
    }

    pub fn param_of(&self, root: Root) -> &'static str {
        self.entry(root).param
    }
}

fn rational_to_i32(r: &Rational) -> Result<i32> {
    if !r.is_integer() {
        return Err(Error::InvalidArgument(format!("non-integral weight coefficient {r}")));
    }
    i32::try_from(r.to_integer()).map_err(|_| Error::InvalidArgument("weight overflow".into()))
}

pub fn datum() -> &'static RootDatum {
    static DATUM: OnceLock<RootDatum> = OnceLock::new();
    DATUM.get_or_init(|| RootDatum::compute().expect("the G2 display has a root decomposition"))
}

pub fn root_matrix(root: Root) -> &'static RingMatrix<Rational> {
    &datum().entry(root).matrix
}

fn lift<S: Ring>(m: &RingMatrix<Rational>) -> RingMatrix<S> {
    m.map(|r| S::from_rational(r).expect("denominators of root exponentials divide 24"))
}

/// `x_root(u) = exp(u E_root)`, a finite sum since `E_root` is nilpotent.
///
/// # Panics
/// If 2 or 3 is not invertible in `S`.
pub fn one_param<S: Ring>(root: Root, u: &S) -> RingMatrix<S> {
    let terms = &datum().entry(root).exp_terms;
    let mut out = RingMatrix::<S>::identity(8);
    let mut upow = S::one();
    for t in &terms[1..] {
        upow = upow.mul(u);
        out = out.add(&lift::<S>(t).scale(&upow));
    }
    out
}

/// `n_root(t) = x_root(t) x_{-root}(-1/t) x_root(t)`; `t` must be a unit.
pub fn n_alpha<S: Ring>(root: Root, t: &S) -> Result<RingMatrix<S>> {
    let tinv = t.inv().ok_or(Error::NotAUnit(format!("{t:?}")))?;
    let x = one_param(root, t);
    Ok(x.mul(&one_param(root.neg(), &tinv.neg())).mul(&x))
}

/// `h_root(t) = n_root(t) n_root(-1)`.
pub fn h_alpha<S: Ring>(root: Root, t: &S) -> Result<RingMatrix<S>> {
    Ok(n_alpha(root, t)?.mul(&n_alpha(root, &S::one().neg())?))
}

/// Weyl representative `n_root(1)` for a simple root.
pub fn weyl_rep<S: Ring>(root: Root) -> Result<RingMatrix<S>> {
    if !root.is_simple() {
        return Err(Error::NotSimpleRoot(root.to_string()));
    }
    n_alpha(root, &S::one())
}

/// Inverse of `weyl_rep(root)`, which is `n_root(-1)`.
pub fn weyl_rep_inverse<S: Ring>(root: Root) -> Result<RingMatrix<S>> {
    if !root.is_simple() {
        return Err(Error::NotSimpleRoot(root.to_string()));
    }
    n_alpha(root, &S::one().neg())
}

/// Grades of the coordinates: P is the block upper triangular subgroup for
/// the blocks {1,2}, {3,...,6}, {7,8}.
pub const GRADES: [i32; 8] = [1, 1, 0, 0, 0, 0, -1, -1];

/// First entry of `g` that must vanish for `g` to lie in P.
pub fn parabolic_defect<S: Ring>(
    g: &RingMatrix<S>,
    is_zero: impl Fn(&S) -> bool,
) -> Option<(usize, usize)> {
    for i in 0..8 {
        for j in 0..8 {
            if GRADES[i] < GRADES[j] && !is_zero(g.get(i, j)) {
                return Some((i, j));
            }
        }
    }
    None
}

/// `[g_α, g_β] ⊆ g_{α+β}`; for `β = -α` the bracket is diagonal. Returns the
/// first offending pair.
pub fn bracket_grading_defect() -> Option<(Root, Root)> {
    for a in Root::all() {
        for b in Root::all() {
            let br = root_matrix(a).bracket(root_matrix(b));
            let ok = if a == b.neg() {
                br.is_diagonal() && !br.is_zero()
            } else {
                match a.plus(b) {
                    Some(s) => {
                        let target = root_matrix(s);
                        let (i, j) = (0..64)
                            .map(|k| (k / 8, k % 8))
                            .find(|&(i, j)| !Ring::is_zero(target.get(i, j)))
                            .unwrap();
                        let ratio = br.get(i, j) / target.get(i, j);
                        br == target.scale(&ratio)
                    }
                    None => br.is_zero(),
                }
            };
            if !ok {
                return Some((a, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::v;
    use crate::algebra::rat;
    use crate::g2model::forms::{j_defect, TrilinearForm};

    #[test]
    fn parameter_root_table() {
        let table = [
            ("a", (1, 0)),
            ("b", (0, 1)),
            ("c", (1, 1)),
            ("d", (2, 1)),
            ("e", (3, 1)),
            ("f", (3, 2)),
            ("g", (-1, 0)),
            ("h", (-1, -1)),
            ("i", (-2, -1)),
            ("j", (-3, -1)),
            ("k", (-3, -2)),
            ("l", (0, -1)),
        ];
        for (p, (c1, c2)) in table {
            assert_eq!(Root::from_param(p), Some(Root { c1, c2 }), "{p}");
        }
    }

    #[test]
    fn display_names() {
        assert_eq!(Root::new(2, 1).unwrap().to_string(), "2α1+α2");
        assert_eq!(Root::new(-3, -2).unwrap().to_string(), "-3α1-2α2");
        assert_eq!(Root::ALPHA2.to_string(), "α2");
        assert!(Root::new(1, 2).is_err());
    }

    #[test]
    fn short_root_exponential() {
        // E_a^2 = -2 e36, so x_a(u) = 1 + u E_a - u^2 e36.
        let e = root_matrix(Root::ALPHA1);
        let sq = e.mul(e);
        let mut expected = RingMatrix::<Rational>::zeros(8, 8);
        expected.set(2, 5, rat(-2));
        assert_eq!(sq, expected);
        let u = v("u");
        let x = one_param(Root::ALPHA1, &u);
        assert_eq!(*x.get(2, 5), -(u.clone() * u.clone()));
        assert_eq!(*x.get(0, 1), u);
    }

    #[test]
    fn one_param_is_additive() {
        for r in Root::all() {
            let (u, w) = (v("u"), v("w"));
            let lhs = one_param(r, &u).mul(&one_param(r, &w));
            assert_eq!(lhs, one_param(r, &(u + w)), "{r}");
        }
        let u = v("u");
        assert!(one_param(Root::ALPHA2, &u)
            .mul(&one_param(Root::ALPHA2, &-u))
            .is_identity());
        assert!(one_param(Root::ALPHA2, &rat(0)).is_identity());
    }

    #[test]
    fn root_groups_lie_in_g2() {
        let t = TrilinearForm::standard();
        for r in Root::all() {
            let g = one_param(r, &v("u"));
            assert!(j_defect(&g, LaurentPoly::is_zero).is_none(), "{r}");
            assert!(t.preservation_defect(&g, LaurentPoly::is_zero).is_none(), "{r}");
        }
    }

    #[test]
    fn exponential_denominators_divide_24() {
        for e in &datum().entries {
            for t in &e.exp_terms {
                for x in t.entries() {
                    assert!((rat(24) * x).is_integer());
                }
            }
        }
    }

    #[test]
    fn grading_of_brackets() {
        assert_eq!(bracket_grading_defect(), None);
    }

    #[test]
    fn weyl_rep_rejects_non_simple() {
        assert!(matches!(
            weyl_rep::<Rational>(Root::new(1, 1).unwrap()),
            Err(Error::NotSimpleRoot(_))
        ));
    }

    #[test]
    fn reflections_are_involutions() {
        for r in Root::all() {
            for s in [Root::ALPHA1, Root::ALPHA2] {
                let once = r.reflect(s).unwrap();
                assert!(Root::all().contains(&once));
                assert_eq!(once.reflect(s).unwrap(), r);
            }
        }
        assert_eq!(Root::ALPHA2.reflect(Root::ALPHA2).unwrap(), Root::ALPHA2.neg());
    }

    #[test]
    fn w2_permutes_root_spaces() {
        let w = weyl_rep::<Rational>(Root::ALPHA2).unwrap();
        let winv = weyl_rep_inverse::<Rational>(Root::ALPHA2).unwrap();
        assert!(w.mul(&winv).is_identity());
        for r in Root::all() {
            let conj = w.mul(root_matrix(r)).mul(&winv);
            let target = root_matrix(r.reflect(Root::ALPHA2).unwrap());
            assert!(conj == *target || conj == target.neg(), "{r}");
        }
    }

    #[test]
    fn parabolic_roots_match_block_shape() {
        for r in Root::all() {
            let shape_ok = parabolic_defect(root_matrix(r), Ring::is_zero).is_none();
            assert_eq!(shape_ok, r.in_parabolic(), "{r}");
        }
    }
}
