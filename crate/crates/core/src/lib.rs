//! Exact verification of the local unramified computation behind the adjoint
//! L-function of the quasi-split unitary group SU(2,1), realized inside the
//! split exceptional group G2.
//!
//! Every check is symbolic and exact: matrices over Laurent polynomials,
//! power series truncated by degree, and finite-field orbit enumeration for
//! the double-coset count.

pub mod algebra;
pub mod error;
pub mod errata;
pub mod g2model;
pub mod lfunc;
pub mod orbits;
pub mod report;
pub mod reps;

pub use error::{Error, Result};
pub use report::{Check, Status, VerificationReport};
