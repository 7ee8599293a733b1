//! Exact arithmetic kernel: rationals, multivariate Laurent polynomials,
//! truncated power series, and dense matrices over any exact ring.

pub mod formal;
pub mod laurent;
pub mod matrix;
pub mod ratfunc;
pub mod rational;
pub mod ring;
pub mod series;

pub use formal::FormalInverses;
pub use laurent::LaurentPoly;
pub use matrix::{EntryDiff, RingMatrix};
pub use ratfunc::RationalFunction;
pub use rational::{factorial, fmt_rational, rat, rat_frac, Rational};
pub use ring::Ring;
pub use series::{series_expand, SeriesDiff, TruncatedSeries};
