use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value for {name}")]
    NonFinite { name: &'static str },
    #[error("leading coefficient must be positive")]
    NonPositiveLeadingCoefficient,
    #[error("leading and trailing coefficients must be positive")]
    NegativeLeadingOrTrailing,
    #[error("lambda_H must be positive")]
    NonPositiveLambdaH,
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("invalid tolerance {0}")]
    InvalidTolerance(f64),
    #[error("cannot parse number {0:?}")]
    BadNumber(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
