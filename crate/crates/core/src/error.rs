use thiserror::Error;

/// Failures raised by the series algebra, class construction and bound evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term must be {expected} for {op}")]
    ConstantTerm { op: &'static str, expected: &'static str },
    #[error("series of order {have} is too short, need order {need}")]
    OrderTooSmall { have: usize, need: usize },
    #[error("order {0} exceeds the supported maximum {max}", max = crate::series::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("series must have at least one coefficient")]
    Empty,
    #[error("exponent {0} cannot be represented on the exact backend")]
    InexactExponent(String),
    #[error("parameter {name} = {value} has no exact rational value")]
    InexactParameter { name: &'static str, value: String },
    #[error("{0} is only available on the float backend")]
    FloatOnly(&'static str),
    #[error("Schur parameter {index} has modulus {modulus} > 1")]
    SchurModulus { index: usize, modulus: f64 },
    #[error("coefficient index {requested} out of range (1..={available})")]
    CoefficientRange { requested: usize, available: usize },
    #[error("function is not normalized: {0}")]
    Normalization(&'static str),
    #[error("invalid class specification: {0}")]
    InvalidSpec(String),
    #[error("(mu, upsilon) = ({mu}, {upsilon}) lies outside the covered regions D2, D6, D9")]
    UncoveredRegion { mu: f64, upsilon: f64 },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
