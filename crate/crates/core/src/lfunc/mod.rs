//! Local L-factors, zeta normalizations, the inner integral and the series
//! identities of the unramified computation.

pub mod identities;
pub mod integral;
pub mod lfactor;
pub mod proposition;
pub mod zeta;

/// Residue field cardinality, kept symbolic.
pub const Q: &str = "q";
/// `x = q^{-3s+1}`.
pub const X: &str = "x";

pub use identities::{
    nonsplit_identity_check, poincare_check, poincare_oracle, split_identity_check, verify_identities,
};
pub use integral::{inner_integral, inner_integral_closed_form};
pub use lfactor::{local_l_factor, local_l_factor_prime, verify_lfactor};
pub use proposition::{proposition_check, verify_integral, unramified_lhs, unramified_rhs, PlaceCase};
pub use zeta::{zeta_factor, ZetaArg, ZetaTriple, PRINTED_TRIPLE, RECONSTRUCTED_TRIPLE};
