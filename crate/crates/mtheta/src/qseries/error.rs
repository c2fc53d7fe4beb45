use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("lowest available coefficient is zero at full precision")]
    ZeroLeadingCoefficient,
    #[error("exponent {0} is not integral after scaling")]
    NonIntegralExponent(String),
    #[error("term valuation did not reach {target} within {cap} iterations")]
    NonterminatingValuation { target: i64, cap: usize },
    #[error("outer summation hit its cap of {cap} iterations before the exponent passed {target}")]
    TruncationOverflow { target: i64, cap: usize },
    #[error("summand at index {index} has a pole at q = 1 (denominator 1 - q^0)")]
    PoleAtUnity { index: i64 },
    #[error("theta denominator j(z; q^M) vanishes identically")]
    ZeroThetaDenominator,
    #[error("coefficient of q^{exponent} is not an integer")]
    NonIntegerCoefficient { exponent: i64 },
    #[error("series has negative offset {0}")]
    NegativeOffset(i64),
    #[error("division by zero constant factor")]
    DivisionByZero,
    #[error("invalid series definition: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, SeriesError>;
