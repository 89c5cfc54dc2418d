use thiserror::Error;

/// Errors raised by hyperspace arithmetic and conversions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HyperError {
    #[error("incompatible dimensions: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("dimension {0} is below the minimum of 2")]
    DimensionTooSmall(usize),
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("modulus must be non-negative, got {0}")]
    NegativeModulus(f64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("direction undefined for a zero-modulus number")]
    ZeroModulus,
    #[error("root index must be at least 1, got {0}")]
    InvalidRootIndex(i64),
    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },
    #[error("vector has a nonzero component {value} along target axis {axis}")]
    NonzeroAxisComponent { axis: usize, value: f64 },
    #[error("rotation steps must use distinct axes in ascending or descending order")]
    UnorderedSteps,
    #[error("tolerances must be strictly positive")]
    InvalidTolerance,
}

pub type Result<T, E = HyperError> = std::result::Result<T, E>;
