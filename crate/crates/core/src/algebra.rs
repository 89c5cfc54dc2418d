//! Normative arithmetic.
//!
//! Addition and negation act on coefficients. Multiplication, division,
//! integer powers and roots act on the exponent form: moduli multiply and
//! angle chains add. [`ExpForm`] keeps the raw chain produced by those
//! operations, so chained products compose as the exponent form dictates.
//! Folding a product back onto canonical angles (what the Cartesian-in,
//! Cartesian-out functions below do) loses that chain; for `N ≥ 3` the result
//! of a further product then depends on whether the fold happened.

use crate::convert::{self, canonical_angles, chain_to_coeffs};
use crate::error::{HyperError, Result};
use crate::number::{CartesianHC, Orientation, PolarHC};
use crate::scalar::Real;

/// A number held as modulus plus an angle chain that need not be canonical.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpForm<T> {
    modulus: T,
    angles: Vec<T>,
    orientation: Orientation,
}

impl<T: Real> ExpForm<T> {
    pub fn new(modulus: T, angles: Vec<T>, orientation: Orientation) -> Result<Self> {
        if angles.is_empty() {
            return Err(HyperError::DimensionTooSmall(1));
        }
        if !modulus.is_finite() || angles.iter().any(|a| !a.is_finite()) {
            return Err(HyperError::NonFinite("exponent form"));
        }
        if modulus < T::zero() {
            return Err(HyperError::NegativeModulus(modulus.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self {
            modulus,
            angles,
            orientation,
        })
    }

    pub fn from_cartesian(s: &CartesianHC<T>, o: Orientation) -> Self {
        Self::from_polar(&convert::to_polar(s, o))
    }

    pub fn from_polar(p: &PolarHC<T>) -> Self {
        Self {
            modulus: p.modulus(),
            angles: p.angles().to_vec(),
            orientation: p.orientation(),
        }
    }

    pub fn modulus(&self) -> T {
        self.modulus
    }

    /// raw angle chain
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
        CartesianHC::from_vec_unchecked(chain_to_coeffs(self.modulus, &self.angles, self.orientation))
    }

    /// Canonical polar form of the same point.
    pub fn to_polar(&self) -> PolarHC<T> {
        let angles = canonical_angles(self.modulus, &self.angles, self.orientation);
        PolarHC::from_parts_unchecked(self.modulus, angles, self.orientation)
    }

    /// Re-expresses `other` in this value's orientation. Same orientation keeps
    /// the raw chain; a different one goes through coordinates.
    fn aligned<'a>(&self, other: &'a Self) -> Result<std::borrow::Cow<'a, Self>> {
        if self.dim() != other.dim() {
            return Err(HyperError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        if self.orientation == other.orientation {
            Ok(std::borrow::Cow::Borrowed(other))
        } else {
            Ok(std::borrow::Cow::Owned(Self::from_cartesian(
                &other.to_cartesian(),
                self.orientation,
            )))
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let other = self.aligned(other)?;
        let angles = self
            .angles
            .iter()
            .zip(&other.angles)
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(Self {
            modulus: self.modulus * other.modulus,
            angles,
            orientation: self.orientation,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let other = self.aligned(other)?;
        if other.modulus == T::zero() {
            return Err(HyperError::DivisionByZero);
        }
        let angles = self
            .angles
            .iter()
            .zip(&other.angles)
            .map(|(&a, &b)| a - b)
            .collect();
        Ok(Self {
            modulus: self.modulus / other.modulus,
            angles,
            orientation: self.orientation,
        })
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        if n < 0 && self.modulus == T::zero() {
            return Err(HyperError::DivisionByZero);
        }
        let k = T::from_i32(n).expect("i32 fits every float type");
        Ok(Self {
            modulus: self.modulus.powi(n),
            angles: self.angles.iter().map(|&a| a * k).collect(),
            orientation: self.orientation,
        })
    }

    /// All `n` roots `|s|^{1/n} ∏ e^{i_k (θ_k + 2mπ)/n}`, `m = 0 … n-1`.
    pub fn nth_roots(&self, n: u32) -> Result<RootSet<T>> {
        if n == 0 {
            return Err(HyperError::InvalidRootIndex(0));
        }
        let nf = T::from_u32(n).expect("u32 fits every float type");
        let modulus = self.modulus.powf(nf.recip());
        let roots = (0..n)
            .map(|m| {
                let shift = T::TAU() * T::from_u32(m).expect("u32 fits");
                let angles = if self.modulus == T::zero() {
                    vec![T::zero(); self.angles.len()]
                } else {
                    self.angles.iter().map(|&a| (a + shift) / nf).collect()
                };
                Self {
                    modulus,
                    angles,
                    orientation: self.orientation,
                }
            })
            .collect();
        Ok(RootSet { index: n, roots })
    }

    /// Negates every angle: same modulus, conjugate coefficients.
    pub fn conj(&self) -> Self {
        Self {
            modulus: self.modulus,
            angles: self.angles.iter().map(|&a| -a).collect(),
            orientation: self.orientation,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_cartesian(
            &add(&self.to_cartesian(), &other.to_cartesian())?,
            self.orientation,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let neg = negate(&other.to_cartesian());
        Ok(Self::from_cartesian(&add(&self.to_cartesian(), &neg)?, self.orientation))
    }

    pub fn neg(&self) -> Self {
        Self::from_cartesian(&negate(&self.to_cartesian()), self.orientation)
    }
}

/// The `n` roots of a number, index `m = 0 … n-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet<T> {
    index: u32,
    roots: Vec<ExpForm<T>>,
}

impl<T: Real> RootSet<T> {
    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn roots(&self) -> &[ExpForm<T>] {
        &self.roots
    }

    pub fn cartesian(&self) -> Vec<CartesianHC<T>> {
        self.roots.iter().map(ExpForm::to_cartesian).collect()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

pub fn add<T: Real>(s1: &CartesianHC<T>, s2: &CartesianHC<T>) -> Result<CartesianHC<T>> {
    s1.check_dim(s2)?;
    let sum = s1.coeffs().iter().zip(s2.coeffs()).map(|(&a, &b)| a + b).collect();
    Ok(CartesianHC::from_vec_unchecked(sum))
}

pub fn sub<T: Real>(s1: &CartesianHC<T>, s2: &CartesianHC<T>) -> Result<CartesianHC<T>> {
    add(s1, &negate(s2))
}

pub fn negate<T: Real>(s: &CartesianHC<T>) -> CartesianHC<T> {
    CartesianHC::from_vec_unchecked(s.coeffs().iter().map(|&a| -a).collect())
}

pub fn mul<T: Real>(s1: &CartesianHC<T>, s2: &CartesianHC<T>, o: Orientation) -> Result<CartesianHC<T>> {
    s1.check_dim(s2)?;
    Ok(ExpForm::from_cartesian(s1, o)
        .mul(&ExpForm::from_cartesian(s2, o))?
        .to_cartesian())
}

pub fn div<T: Real>(s1: &CartesianHC<T>, s2: &CartesianHC<T>, o: Orientation) -> Result<CartesianHC<T>> {
    s1.check_dim(s2)?;
    Ok(ExpForm::from_cartesian(s1, o)
        .div(&ExpForm::from_cartesian(s2, o))?
        .to_cartesian())
}

pub fn pow_int<T: Real>(s: &CartesianHC<T>, n: i32, o: Orientation) -> Result<CartesianHC<T>> {
    Ok(ExpForm::from_cartesian(s, o).pow(n)?.to_cartesian())
}

pub fn nth_roots<T: Real>(s: &CartesianHC<T>, n: u32, o: Orientation) -> Result<RootSet<T>> {
    ExpForm::from_cartesian(s, o).nth_roots(n)
}
