//! Value types: orientation, Cartesian coefficients, and canonical polar form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::convert;
use crate::error::{HyperError, Result};
use crate::scalar::Real;

/// Order in which rotation operators are chained and component arguments are
/// measured.
///
/// With `Anticlockwise` the chain starts in the plane of `x_1` and climbs to
/// `x_{N-1}`; `Clockwise` starts at `x_{N-1}` and descends to `x_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Orientation {
    #[default]
    #[serde(rename = "ccw")]
    Anticlockwise,
    #[serde(rename = "cw")]
    Clockwise,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Anticlockwise => "ccw",
            Orientation::Clockwise => "cw",
        }
    }

    /// Imaginary axis (1-based) handled at chain position `pos` (0-based) for a
    /// number of dimension `dim`. Position 0 carries the full-range angle.
    pub fn axis_at(self, pos: usize, dim: usize) -> usize {
        match self {
            Orientation::Anticlockwise => pos + 1,
            Orientation::Clockwise => dim - 1 - pos,
        }
    }

    /// imaginary axes in chain order
    pub fn chain(self, dim: usize) -> impl Iterator<Item = usize> {
        (0..dim - 1).map(move |p| self.axis_at(p, dim))
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Orientation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "ccw" | "anticlockwise" => Ok(Orientation::Anticlockwise),
            "cw" | "clockwise" => Ok(Orientation::Clockwise),
            other => Err(format!("unknown orientation `{other}` (expected ccw or cw)")),
        }
    }
}

/// Coordinate expression `a_0 + Σ i_k a_k` of a hyperspace complex number.
///
/// Always at least two coefficients, all finite.
#[derive(Debug, Clone, PartialEq)]
pub struct CartesianHC<T> {
    coeffs: Vec<T>,
}

impl<T: Real> CartesianHC<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(HyperError::DimensionTooSmall(coeffs.len()));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(HyperError::NonFinite("coefficients"));
        }
        Ok(Self { coeffs })
    }

    /// Builds from a slice of `f64` literals, converting to `T`.
    pub fn from_f64s(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| T::lit(c)).collect())
    }

    pub(crate) fn from_vec_unchecked(coeffs: Vec<T>) -> Self {
        debug_assert!(coeffs.len() >= 2);
        Self { coeffs }
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(vec![T::zero(); dim])
    }

    /// Real unity `c[1, 0, …, 0]`.
    pub fn one(dim: usize) -> Result<Self> {
        Self::unit(dim, 0)
    }

    /// Basis vector along axis `axis` (0 is the real axis).
    pub fn unit(dim: usize, axis: usize) -> Result<Self> {
        if axis >= dim {
            return Err(HyperError::AxisOutOfRange { axis, dim });
        }
        let mut coeffs = vec![T::zero(); dim];
        coeffs[axis] = T::one();
        Self::new(coeffs)
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn re(&self) -> T {
        self.coeffs[0]
    }

    /// Imaginary part on axis `k` (1-based).
    pub fn im(&self, k: usize) -> Option<T> {
        if k == 0 {
            None
        } else {
            self.coeffs.get(k).copied()
        }
    }

    pub fn into_vec(self) -> Vec<T> {
        self.coeffs
    }

    pub fn modulus(&self) -> T {
        convert::modulus(self)
    }

    pub(crate) fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(HyperError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }
}

impl<T: Real> fmt::Display for CartesianHC<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("c[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Canonical exponent form `|s| ∏ e^{i_k θ_k}`.
///
/// The full-range angle (θ_1 for anticlockwise, θ_{N-1} for clockwise) lies in
/// `[0, 2π)`; every other angle lies in `[-π/2, π/2]`. A zero modulus forces all
/// angles to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarHC<T> {
    modulus: T,
    angles: Vec<T>,
    orientation: Orientation,
}

impl<T: Real> PolarHC<T> {
    /// Builds a canonical polar value; angles outside the canonical ranges are
    /// folded onto the same point.
    pub fn new(modulus: T, angles: Vec<T>, orientation: Orientation) -> Result<Self> {
        if angles.is_empty() {
            return Err(HyperError::DimensionTooSmall(1));
        }
        if !modulus.is_finite() || angles.iter().any(|a| !a.is_finite()) {
            return Err(HyperError::NonFinite("polar components"));
        }
        if modulus < T::zero() {
            return Err(HyperError::NegativeModulus(modulus.to_f64().unwrap_or(f64::NAN)));
        }
        let angles = convert::canonical_angles(modulus, &angles, orientation);
        Ok(Self {
            modulus,
            angles,
            orientation,
        })
    }

    pub(crate) fn from_parts_unchecked(modulus: T, angles: Vec<T>, orientation: Orientation) -> Self {
        Self {
            modulus,
            angles,
            orientation,
        }
    }

    pub fn modulus(&self) -> T {
        self.modulus
    }

    /// Angles θ_1 … θ_{N-1}, indexed by imaginary axis minus one.
    pub fn angles(&self) -> &[T] {
        &self.angles
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn dim(&self) -> usize {
        self.angles.len() + 1
    }

    pub fn to_cartesian(&self) -> CartesianHC<T> {
        convert::from_polar(self)
    }
}

impl<T: Real> fmt::Display for PolarHC<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p[{}; ", self.modulus)?;
        for (i, a) in self.angles.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}
