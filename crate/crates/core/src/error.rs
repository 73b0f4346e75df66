use thiserror::Error;

use crate::series::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("principal variables differ: {0} vs {1}")]
    VariableMismatch(Var, Var),
    #[error("all stored coefficients vanish; valuation undefined")]
    ZeroSeries,
    #[error("coefficient outside the truncation window: {0}")]
    OutOfTruncation(String),
    #[error("bad constant term: {0}")]
    BadConstantTerm(String),
    #[error("constant term is not a unit: {0}")]
    NonUnitConstantTerm(String),
    #[error("inner series of a composition has a nonzero constant term")]
    NonzeroConstantInner,
    #[error("phi(0) is not a unit")]
    NonUnitPhiConstant,
    #[error("no compositional inverse: {0}")]
    NotInvertible(String),
    #[error("valuation of the substituted series must be positive, got {0}")]
    NonpositiveValuation(i64),
    #[error("Legendre transform undefined: {0}")]
    NotLegendrable(String),
    #[error("fixed-point iteration did not stabilise degree {0}")]
    NoConvergenceAtDegree(i64),
    #[error("grading does not make the inversion locally finite: {0}")]
    GradingNotLocallyFinite(String),
    #[error("series carries no h grading")]
    MissingHbarGrading,
    #[error("1 - pq vanishes: the exceptional element needs a further Gaussian")]
    ExceptionalElement,
    #[error("a unit is required: {0}")]
    UnitRequired(String),
    #[error("edge coefficient is not a unit: {0}")]
    NonUnitEdge(String),
    #[error("filter cannot bound the vertex sum: {0}")]
    FilterTooLoose(String),
    #[error("quadratic coefficient is not a unit: {0}")]
    QuadraticNotUnit(String),
    #[error("l2 has zero Euler weight and is not allowed here")]
    Lambda2NotAllowed,
    #[error("content has {0} half-ends, above the enumeration bound {1}")]
    TooLarge(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
