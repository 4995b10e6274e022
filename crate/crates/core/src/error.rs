use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    Dimension { expected: usize, found: usize },
    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,
    #[error("{0} is undefined for the zero polynomial")]
    ZeroPolynomial(&'static str),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("radical computation did not reach a linear basis: {0}")]
    Radical(String),
    #[error("point {0:?} is not a corner of the support")]
    NotACorner(Vec<i64>),
    #[error("point {0:?} is not in the support")]
    NotInSupport(Vec<i64>),
    #[error("coordinate {index} out of range for {nvars} variables")]
    Coordinate { index: usize, nvars: usize },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division by zero")]
    ZeroDenominator,
    #[error("invalid equation: {0}")]
    Equation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
