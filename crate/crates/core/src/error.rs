use thiserror::Error;

use crate::exact_poly::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A polynomial in `n` that separates the two unknot diagrams `[1]` and `[-1]`,
/// so it cannot be the restriction of a knot invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial is not admissible: f(1) = {at_one} but f(-1) = {at_minus_one}")]
pub struct AdmissibilityError {
    pub at_one: Rational,
    pub at_minus_one: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be odd (got {0})")]
    EvenArgument(i64),

    #[error(transparent)]
    Admissibility(Box<AdmissibilityError>),

    #[error("{got} sample(s) cannot pin a polynomial of degree {bound}; at least {} required", bound + 1)]
    InsufficientSamples { bound: usize, got: usize },

    #[error("samples interpolate to degree {degree}, above the stated bound {bound}")]
    DegreeBoundExceeded { bound: usize, degree: usize },

    #[error("the zero element has no filtration order")]
    ZeroOrder,

    #[error("invalid Gauss diagram: {0}")]
    InvalidDiagram(String),

    #[error("Gauss code token {position} ({token}): {reason}")]
    GaussCode {
        token: String,
        position: usize,
        reason: String,
    },
}

impl From<AdmissibilityError> for Error {
    fn from(e: AdmissibilityError) -> Self {
        Error::Admissibility(Box::new(e))
    }
}
