use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid fraction {num}/{den}: {reason}")]
    InvalidFraction {
        num: i64,
        den: i64,
        reason: &'static str,
    },
    #[error("invalid torus knot parameters ({p}, {q}): {reason}")]
    InvalidKnot {
        p: i64,
        q: i64,
        reason: &'static str,
    },
    #[error("continued fraction coefficients must be nonempty and at least 2, got {0:?}")]
    InvalidCoefficients(Vec<i64>),
    #[error("contact surgery coefficient {0} must be less than -1")]
    InvalidSurgeryCoefficient(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("singular linking matrix")]
    SingularMatrix,
    #[error("value {0} is not an integer")]
    NonIntegral(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
