//! The adjoint representation of the L-group of U(2,1), its characters, and
//! unramified Satake classes.

pub mod adjoint;
pub mod characters;
pub mod satake;

pub use adjoint::{conjugation_matrix, r_fr, r_fr_coset, r_matrix, r_prime_fr, AdjointBasis};
pub use characters::{
    alpha3, dimension, is_weyl_invariant, schur_char, schur_expand, sl2_char, sym_power_char,
    weyl_dimension, ALPHA1, ALPHA2,
};
pub use satake::{fr_eigensplit, SatakeClass, MU};
