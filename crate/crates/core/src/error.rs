use thiserror::Error;

use crate::ratlin::LinalgError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error("shape mismatch in {what}: expected {expected}, found {found}")]
    Shape {
        what: &'static str,
        expected: String,
        found: String,
    },

    #[error("{what} is invalid: {summary}")]
    Invalid { what: String, summary: String },

    #[error("subspace is not a two-sided ideal of {algebra}")]
    NotAnIdeal { algebra: String },

    #[error("subspace is not closed under the bracket of {algebra}")]
    NotASubalgebra { algebra: String },

    #[error("sub-pair is not a crossed ideal of {xmod}")]
    NotACrossedIdeal { xmod: String },

    #[error("homomorphism {what} is not surjective")]
    NotSurjective { what: String },

    #[error("extension is not central: the kernel is not contained in the center of {total}")]
    NotCentral { total: String },

    #[error(
        "{xmod} is not perfect; the exterior extension is a stem cover only for perfect crossed modules"
    )]
    NotPerfect { xmod: String },

    #[error("operation does not descend to the quotient: {0}")]
    IllDefined(String),

    #[error("generated span is not closed: {0}")]
    NotClosed(String),

    #[error("boundary degree {degree} outside supported range {min}..={max}")]
    DegreeOutOfRange { degree: usize, min: usize, max: usize },

    #[error("quotients of the two extensions differ")]
    QuotientMismatch,

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn shape(what: &'static str, expected: impl ToString, found: impl ToString) -> Self {
        Error::Shape {
            what,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
