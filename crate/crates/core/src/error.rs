use thiserror::Error;

/// Errors surfaced by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    BadModulus(u64),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("the zero series has no inverse")]
    ZeroSeries,

    #[error("series of odd valuation {0} has no square root")]
    OddValuation(i64),

    #[error("leading coefficient {0} is not a square mod {1}")]
    NonResidue(u64, u64),

    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("place {0} is not on the curve")]
    NotOnCurve(String),

    #[error("divisor or function has support at places that are not rational over the base field")]
    IrrationalSupport,

    #[error("the linear system is empty")]
    EmptyLinearSystem,

    #[error("divisor is not effective")]
    NotEffective,

    #[error("the zero function has no divisor")]
    ZeroFunction,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("sections share a common zero")]
    CommonZero,

    #[error("{0}")]
    NotInSpace(String),

    #[error("class does not lie on this curve")]
    CurveMismatch,

    #[error("not enough rational points: {0}")]
    NotEnoughPoints(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
