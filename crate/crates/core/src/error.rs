use thiserror::Error;

/// Failures raised when an operation is asked to leave its domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("zero raised to the negative power {0}")]
    ZeroToNegativePower(i64),
    #[error("q = {q} is a pole of {context}")]
    Pole { q: String, context: &'static str },
    #[error("invalid rational literal `{0}`")]
    InvalidLiteral(String),
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("empty input to {0}")]
    Empty(&'static str),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn pole(q: &crate::Rational, context: &'static str) -> Error {
    Error::Pole {
        q: crate::numeric::format_rational(q),
        context,
    }
}
