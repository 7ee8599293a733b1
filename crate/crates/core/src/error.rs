use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: {dividend} / {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a unit")]
    NotAUnit(String),

    #[error("constant term of denominator {denominator} is not invertible in the series variables")]
    NonInvertibleConstant { denominator: String },

    #[error("negative exponent of series variable {var} in {poly}")]
    NegativeSeriesExponent { var: String, poly: String },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not invertible")]
    Singular,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("root {0} is not simple")]
    NotSimpleRoot(String),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("zeta argument {c1}s{c0:+} is not expressible in x = q^(-3s+1)")]
    NotExpressibleInX { c1: i64, c0: i64 },

    #[error("unsupported modulus {q}: {reason}")]
    BadModulus { q: u64, reason: String },

    #[error("orbit exceeded the size cap of {cap} elements")]
    OrbitCapExceeded { cap: usize },

    #[error("mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
