use thiserror::Error;

use crate::coeff::CoeffError;
use crate::combinatorics::CombError;

/// Errors raised by algebra computations and the checks built on them.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Comb(#[from] CombError),
    #[error("{what} {value} out of range 1..={bound}")]
    IndexOutOfRange { what: &'static str, value: usize, bound: usize },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("multipartition {shape} does not fit r={r}, n={n}")]
    ShapeMismatch { shape: String, r: usize, n: usize },
    #[error("P_H vanishes at {0}; the algebra is not semisimple there")]
    NotSemisimple(String),
    #[error("algebra of dimension {dim} exceeds the cap {max}")]
    TooLarge { dim: usize, max: usize },
    #[error("vector is not in the span")]
    NotInSpan,
    #[error("{0}")]
    Usage(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
