//! Orbit enumeration over finite fields for the double coset decomposition.

pub mod bfs;
pub mod double_coset;
pub mod field;

pub use bfs::{orbit, OrbitStore, QueueDiscipline, DEFAULT_CAP};
pub use double_coset::{double_coset_check, group_generators, sphere_size, GeneratorSet, SUPPORTED_Q};
pub use field::Fp;
