//! Finite-field analogue of the double coset decomposition: the G2(F_q)-orbit
//! of v_rho and its P(F_q)-orbits.

use super::bfs::{orbit, pack, partition_into_orbits, DenseGen, OrbitStore, Packed, QueueDiscipline};
use super::field::Fp;
use crate::algebra::{Ring, RingMatrix};
use crate::error::{Error, Result};
use crate::g2model::forms::{j_defect, v0, v_rho, TrilinearForm};
use crate::g2model::{h_alpha, one_param, Root};
use crate::report::VerificationReport;

pub const SUPPORTED_Q: [u64; 4] = [5, 7, 11, 13];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorSet {
    /// `x_α(1)` for all twelve roots.
    Full,
    /// `x_α(1)` for the roots of P, with `h_{α1}(g)`, `h_{α2}(g)` for a
    /// primitive root `g`.
    Parabolic,
}

pub fn group_generators<const P: u64>(set: GeneratorSet) -> Result<Vec<RingMatrix<Fp<P>>>> {
    let one = Fp::<P>::one();
    let mut gens: Vec<RingMatrix<Fp<P>>> = Root::all()
        .into_iter()
        .filter(|r| set == GeneratorSet::Full || r.in_parabolic())
        .map(|r| one_param(r, &one))
        .collect();
    if set == GeneratorSet::Parabolic {
        let g = Fp::<P>::primitive_root();
        gens.push(h_alpha(Root::ALPHA1, &g)?);
        gens.push(h_alpha(Root::ALPHA2, &g)?);
    }
    Ok(gens)
}

/// Coordinates 7 and 8 (the `v3` block) both vanish.
pub fn v3_block_zero(v: &Packed) -> bool {
    v[6] == 0 && v[7] == 0
}

fn unpack<const P: u64>(v: &Packed) -> Vec<Fp<P>> {
    v.iter().map(|&x| Fp::new(i64::from(x))).collect()
}

/// `#{v : <v, v0> = 0, <v, v> = 2ρ}`. On `V0` (where `v4 = v5`) the norm is
/// `2(v1v8 + v2v7 + v3v6 + v4²)`, so this counts solutions of
/// `v1v8 + v2v7 + v3v6 + v4² = ρ` by convolving value distributions.
pub fn sphere_size<const P: u64>(rho: Fp<P>) -> u64 {
    let p = P as usize;
    let mut products = vec![0u64; p];
    let mut squares = vec![0u64; p];
    for a in 0..P {
        squares[(a * a % P) as usize] += 1;
        for b in 0..P {
            products[(a * b % P) as usize] += 1;
        }
    }
    let convolve = |x: &[u64], y: &[u64]| {
        let mut out = vec![0u64; p];
        for (i, &a) in x.iter().enumerate() {
            for (j, &b) in y.iter().enumerate() {
                out[(i + j) % p] += a * b;
            }
        }
        out
    };
    let d = convolve(&convolve(&convolve(&products, &products), &products), &squares);
    d[rho.value() as usize]
}

fn count_in(part: &OrbitStore, v3_zero: bool) -> usize {
    part.elements().iter().filter(|v| v3_block_zero(v) == v3_zero).count()
}

fn check_for<const P: u64>(rho_in: i64, cap: usize, parallel: bool) -> Result<VerificationReport> {
    let rho = Fp::<P>::new(rho_in);
    if rho.is_zero() {
        return Err(Error::InvalidArgument(format!("rho = {rho_in} is not a unit mod {P}")));
    }
    let q = P;
    let square = rho.is_square();
    let mut rep = VerificationReport::new("orbits");
    rep.param("q", q).param("rho", rho.value()).param("rho_is_square", square);

    let full = group_generators::<P>(GeneratorSet::Full)?;
    let para = group_generators::<P>(GeneratorSet::Parabolic)?;
    let form = TrilinearForm::standard();
    let bad = full.iter().chain(&para).position(|g| {
        j_defect(g, |x: &Fp<P>| x.is_zero()).is_some() || form.preservation_defect(g, |x: &Fp<P>| x.is_zero()).is_some()
    });
    rep.check(
        "generators-in-g2",
        bad.is_none(),
        format!("{} full and {} parabolic generators preserve J and T mod {q}", full.len(), para.len()),
        || bad.map(|i| format!("generator #{i}")),
    );
    let bad_p = para.iter().position(|g| crate::g2model::roots::parabolic_defect(g, |x: &Fp<P>| x.is_zero()).is_some());
    rep.check("parabolic-generators-in-p", bad_p.is_none(), "parabolic generators are block upper triangular", || {
        bad_p.map(|i| format!("generator #{i}"))
    });

    let full_dense: Vec<DenseGen<P>> = full.iter().map(DenseGen::from_matrix).collect();
    let para_dense: Vec<DenseGen<P>> = para.iter().map(DenseGen::from_matrix).collect();
    let start = pack(&v_rho(&rho));
    let (orb, orb_lifo) = if parallel {
        std::thread::scope(|s| {
            let lifo = s.spawn(|| orbit(start, &full_dense, QueueDiscipline::Lifo, cap));
            let fifo = orbit(start, &full_dense, QueueDiscipline::Fifo, cap);
            (fifo, lifo.join().expect("orbit thread panicked"))
        })
    } else {
        (
            orbit(start, &full_dense, QueueDiscipline::Fifo, cap),
            orbit(start, &full_dense, QueueDiscipline::Lifo, cap),
        )
    };
    let (orb, orb_lifo) = (orb?, orb_lifo?);
    rep.check(
        "queue-discipline-independent",
        orb.same_set(&orb_lifo),
        format!("FIFO and LIFO enumeration give the same {} elements", orb.len()),
        || Some(format!("FIFO {} vs LIFO {}", orb.len(), orb_lifo.len())),
    );

    let two_rho = rho.add(&rho);
    let zero_vec: Vec<Fp<P>> = v0();
    let outside = orb.elements().iter().find(|v| {
        let u = unpack::<P>(v);
        !crate::g2model::pairing(&u, &zero_vec).is_zero() || crate::g2model::pairing(&u, &u) != two_rho
    });
    rep.check(
        "orbit-in-sphere",
        outside.is_none(),
        format!("every orbit element lies in V0 with norm 2*rho = {}", two_rho),
        || outside.map(|v| format!("{v:?}")),
    );
    let sphere = sphere_size(rho);
    rep.info(
        "orbit-equals-sphere",
        format!(
            "orbit {} of sphere {}: {}",
            orb.len(),
            sphere,
            if orb.len() as u64 == sphere { "equal" } else { "proper subset" }
        ),
    );

    let q3 = q.pow(3);
    let expected = if square { q3 * (q3 + 1) } else { q3 * (q3 - 1) };
    rep.check(
        "orbit-size",
        orb.len() as u64 == expected,
        format!(
            "|orbit| = {} against q^3(q^3{}1) = {expected}",
            orb.len(),
            if square { "+" } else { "-" }
        ),
        || Some(orb.len().to_string()),
    );

    let parts = partition_into_orbits(&orb, &para_dense)?;
    let mixed = parts.iter().position(|p| count_in(p, true) != 0 && count_in(p, false) != 0);
    rep.check(
        "p-orbits-respect-v3",
        mixed.is_none(),
        "each P-orbit lies on one side of the v3 = 0 predicate",
        || mixed.map(|i| format!("P-orbit #{i} meets both sides")),
    );
    let census: Vec<(usize, bool)> = parts.iter().map(|p| (p.len(), v3_block_zero(&p.elements()[0]))).collect();
    let n_zero = orb.elements().iter().filter(|v| v3_block_zero(v)).count();
    rep.check(
        "two-p-orbits",
        parts.len() == 2 && census.iter().any(|c| c.1) && census.iter().any(|c| !c.1),
        format!(
            "{} P-orbits; v3 = 0: {} elements, v3 != 0: {} elements",
            parts.len(),
            n_zero,
            orb.len() - n_zero
        ),
        || Some(format!("census {census:?}")),
    );
    rep.param("orbit_size", orb.len());
    rep.param("p_orbit_sizes", census.iter().map(|c| c.0.to_string()).collect::<Vec<_>>().join("+"));
    Ok(rep)
}

/// The double coset check for `q` in [`SUPPORTED_Q`].
/// With `parallel`, the two enumeration orders run on separate threads.
pub fn double_coset_check(q: u64, rho: i64, cap: usize, parallel: bool) -> Result<VerificationReport> {
    match q {
        5 => check_for::<5>(rho, cap, parallel),
        7 => check_for::<7>(rho, cap, parallel),
        11 => check_for::<11>(rho, cap, parallel),
        13 => check_for::<13>(rho, cap, parallel),
        _ => Err(Error::BadModulus {
            q,
            reason: format!("supported values are {SUPPORTED_Q:?}"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::bfs::DEFAULT_CAP;

    #[test]
    fn sphere_size_matches_enumeration() {
        type F = Fp<5>;
        for rho in 1..5 {
            let rho = F::new(rho);
            let mut n = 0u64;
            for idx in 0..5u64.pow(7) {
                let mut d = idx;
                let mut c = [0u64; 7];
                for x in c.iter_mut() {
                    *x = d % 5;
                    d /= 5;
                }
                // (v1, v2, v3, v4=v5, v6, v7, v8)
                let s = c[0] * c[6] + c[1] * c[5] + c[2] * c[4] + c[3] * c[3];
                if s % 5 == rho.value() {
                    n += 1;
                }
            }
            assert_eq!(sphere_size(rho), n);
        }
    }

    #[test]
    fn q5_nonsquare() {
        let rep = double_coset_check(5, 2, DEFAULT_CAP, true).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        assert_eq!(rep.params["orbit_size"], "15500");
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(double_coset_check(3, 1, 10, false), Err(Error::BadModulus { .. })));
        assert!(double_coset_check(5, 10, 10, false).is_err());
    }
}
