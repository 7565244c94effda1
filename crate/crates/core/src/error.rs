use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MismatchedField,
    #[error("operands belong to different skew-polynomial rings")]
    MismatchedRing,
    #[error("invalid field specification: {0}")]
    InvalidField(String),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{what}: search cost {cost} exceeds limit {limit}")]
    GuardExceeded {
        what: &'static str,
        cost: u128,
        limit: u128,
    },
    #[error("condition violated: {0}")]
    ConditionViolated(String),
    #[error("not a right divisor of the modulus (remainder {remainder})")]
    NotARightDivisor { remainder: String },
    #[error("modulus is not two-sided")]
    NotTwoSided,
    #[error("modulus is not of the form x^n - a")]
    NotConstacyclic,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("empty point set")]
    EmptySet,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("generator is not a Wedderburn polynomial over the given roots")]
    NotWedderburn,
    #[error("coefficient does not lie in the subfield")]
    CoefficientNotInSubfield,
    #[error("evaluation points have rank-deficient skew Vandermonde matrix")]
    RankDeficientPoints,
    #[error("code has dimension zero; minimum distance undefined")]
    ZeroCode,
    #[error("integer overflow")]
    Overflow,
    #[error("search cancelled")]
    Cancelled,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
