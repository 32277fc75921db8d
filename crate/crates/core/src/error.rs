use alloc::string::String;

/// Errors raised by the algebraic layer.
///
/// Families are carried in their rendered form (`{x0, x1*x2}`) so that the
/// error stays meaningful after the ring that produced it is dropped.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("the zero element has no degree")]
    ZeroElement,
    #[error("family is empty")]
    EmptyFamily,
    #[error("family {0} contains a non-monomial element")]
    NonMonomialFamily(String),
    #[error("fraction numerator is not a monomial")]
    NonMonomialFraction,
    #[error("fractions live over different families")]
    FamilyMismatch,
    #[error("polynomials live over different rings")]
    RingMismatch,
    #[error("family {0} is not relevant")]
    NotRelevant(String),
    #[error("no positive multiple of deg({0}) lies in the degree group of the family")]
    NoWitness(String),
    #[error("fraction has nonzero degree")]
    DegreeNonzero,
    #[error("chart {0} does not generate the grading group; the twist cannot be trivialized there")]
    TwistObstruction(String),
    #[error("image of variable {0} does not have the degree of the variable")]
    DegreeMismatch(String),
    #[error("{0} could not be written in the chart generators within the search bound")]
    BoundExceeded(String),
    #[error("invalid linear system: {0}")]
    InvalidSystem(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("coefficient {0} is not defined over the target field")]
    CoefficientNotDefined(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
