use serde::{Deserialize, Serialize};

use crate::error::{HyperError, Result};
use crate::scalar::Real;

/// Absolute/relative comparison thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance<T> {
    pub abs_eps: T,
    pub rel_eps: T,
}

impl<T: Real> Tolerance<T> {
    pub fn new(abs_eps: T, rel_eps: T) -> Result<Self> {
        if !(abs_eps > T::zero() && rel_eps > T::zero()) {
            return Err(HyperError::InvalidTolerance);
        }
        Ok(Self { abs_eps, rel_eps })
    }

    /// Threshold for a comparison whose operands have magnitude up to `scale`.
    pub fn threshold(&self, scale: T) -> T {
        self.abs_eps.max(self.rel_eps * scale.abs())
    }

    pub fn close(&self, a: T, b: T) -> bool {
        (a - b).abs() <= self.threshold(a.abs().max(b.abs()))
    }
}

impl<T: Real> Default for Tolerance<T> {
    fn default() -> Self {
        Self {
            abs_eps: T::lit(1e-12),
            rel_eps: T::lit(1e-9),
        }
    }
}
