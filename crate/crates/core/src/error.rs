use thiserror::Error;

use crate::numeric::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("zero raised to a negative power")]
    ZeroToNegativePower,

    /// A method that must produce an integer produced a proper fraction.
    /// This never happens for correct code; it means a convention slipped
    /// (for instance the sign of `B_1`).
    #[error("internal consistency error: {method} produced non-integer {value}")]
    NotIntegral {
        method: &'static str,
        value: Rational,
    },

    /// A series was divided by `t^j` but one of its low coefficients is nonzero.
    #[error("series not divisible by t^{power}: coefficient {index} is {value}")]
    NotDivisible {
        power: usize,
        index: usize,
        value: Rational,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
