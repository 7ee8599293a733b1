//! Breadth-first orbit enumeration for matrix groups over F_P acting on F_P^8.

use std::collections::VecDeque;

use rustc_hash::FxHashSet as HashSet;

use super::field::Fp;
use crate::algebra::RingMatrix;
use crate::error::{Error, Result};

pub const DIM: usize = 8;
pub const DEFAULT_CAP: usize = 10_000_000;

/// Coordinates packed one byte each (P < 256).
pub type Packed = [u8; DIM];

/// A generator in plain integer form for fast application.
#[derive(Clone, Debug)]
pub struct DenseGen<const P: u64> {
    entries: [[u64; DIM]; DIM],
}

impl<const P: u64> DenseGen<P> {
    pub fn from_matrix(m: &RingMatrix<Fp<P>>) -> Self {
        assert!(P < 256, "packing needs P < 256");
        let mut entries = [[0u64; DIM]; DIM];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = m.get(i, j).value();
            }
        }
        DenseGen { entries }
    }

    pub fn apply(&self, v: &Packed) -> Packed {
        let mut out = [0u8; DIM];
        for (i, row) in self.entries.iter().enumerate() {
            let s: u64 = row.iter().zip(v).map(|(a, &b)| a * u64::from(b)).sum();
            out[i] = (s % P) as u8;
        }
        out
    }
}

pub fn pack<const P: u64>(v: &[Fp<P>]) -> Packed {
    let mut out = [0u8; DIM];
    for (o, x) in out.iter_mut().zip(v) {
        *o = x.value() as u8;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueueDiscipline {
    Fifo,
    Lifo,
}

/// Orbit elements in discovery order plus a hash index.
#[derive(Clone, Debug, Default)]
pub struct OrbitStore {
    elements: Vec<Packed>,
    index: HashSet<Packed>,
}

impl OrbitStore {
    fn insert(&mut self, v: Packed) -> bool {
        if self.index.insert(v) {
            self.elements.push(v);
            true
        } else {
            false
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &Packed) -> bool {
        self.index.contains(v)
    }

    pub fn elements(&self) -> &[Packed] {
        &self.elements
    }

    pub fn same_set(&self, other: &OrbitStore) -> bool {
        self.index == other.index
    }
}

/// The orbit of `start` under the semigroup generated by `gens`, which is the
/// group orbit since every generator has finite order.
pub fn orbit<const P: u64>(
    start: Packed,
    gens: &[DenseGen<P>],
    discipline: QueueDiscipline,
    cap: usize,
) -> Result<OrbitStore> {
    let mut store = OrbitStore::default();
    let mut queue = VecDeque::new();
    store.insert(start);
    queue.push_back(start);
    loop {
        let next = match discipline {
            QueueDiscipline::Fifo => queue.pop_front(),
            QueueDiscipline::Lifo => queue.pop_back(),
        };
        let Some(v) = next else { break };
        for g in gens {
            let w = g.apply(&v);
            if store.insert(w) {
                if store.len() > cap {
                    return Err(Error::OrbitCapExceeded { cap });
                }
                queue.push_back(w);
            }
        }
    }
    Ok(store)
}

/// Splits `set` into orbits under `gens`. Each orbit must stay inside `set`.
pub fn partition_into_orbits<const P: u64>(set: &OrbitStore, gens: &[DenseGen<P>]) -> Result<Vec<OrbitStore>> {
    let mut seen: HashSet<Packed> = HashSet::with_capacity_and_hasher(set.len(), Default::default());
    let mut parts = Vec::new();
    for v in set.elements() {
        if seen.contains(v) {
            continue;
        }
        let o = orbit(*v, gens, QueueDiscipline::Fifo, set.len())?;
        if let Some(out) = o.elements().iter().find(|w| !set.contains(w)) {
            return Err(Error::Mismatch(format!("orbit of {v:?} leaves the set at {out:?}")));
        }
        seen.extend(o.elements().iter().copied());
        parts.push(o);
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    #[test]
    fn cyclic_permutation_orbit() {
        type F = Fp<5>;
        let perm = RingMatrix::from_fn(8, 8, |i, j| if (j + 1) % 8 == i { F::one() } else { F::zero() });
        let g = DenseGen::from_matrix(&perm);
        let start = [1, 0, 0, 0, 0, 0, 0, 0];
        for d in [QueueDiscipline::Fifo, QueueDiscipline::Lifo] {
            assert_eq!(orbit(start, std::slice::from_ref(&g), d, 100).unwrap().len(), 8);
        }
        assert_eq!(
            orbit(start, &[g], QueueDiscipline::Fifo, 3).unwrap_err(),
            Error::OrbitCapExceeded { cap: 3 }
        );
    }

    #[test]
    fn scalar_orbit() {
        type F = Fp<7>;
        let s = DenseGen::from_matrix(&RingMatrix::<F>::identity(8).scale(&F::new(3)));
        let o = orbit([1; 8], &[s], QueueDiscipline::Lifo, 100).unwrap();
        assert_eq!(o.len(), 6);
    }
}
