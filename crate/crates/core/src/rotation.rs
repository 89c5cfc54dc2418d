//! Building a point by successive rotations.
//!
//! Start on the real axis at distance `r`. Each step turns the current point
//! toward a fresh basis axis `ê_k`, inside the 2-plane spanned by the point's
//! own direction and `ê_k`. Running the steps over axes `1 … N-1` (or
//! `N-1 … 1`) reproduces the coefficient formulas of the angle chain, which is
//! what makes this an independent check on [`crate::convert::from_polar`].

use crate::error::{HyperError, Result};
use crate::number::{CartesianHC, Orientation};
use crate::scalar::Real;

fn norm<T: Real>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt()
}

/// `cos(angle)·v + sin(angle)·|v|·ê_axis`.
///
/// `v` must have an exactly zero component on `axis`, otherwise the rotation
/// plane is not the one spanned by `v` and `ê_axis`.
pub fn rotate_in_plane<T: Real>(v: &[T], axis: usize, angle: T) -> Result<Vec<T>> {
    if axis >= v.len() {
        return Err(HyperError::AxisOutOfRange { axis, dim: v.len() });
    }
    if v[axis] != T::zero() {
        return Err(HyperError::NonzeroAxisComponent {
            axis,
            value: v[axis].to_f64().unwrap_or(f64::NAN),
        });
    }
    let r = norm(v);
    if r == T::zero() {
        return Ok(v.to_vec());
    }
    let (s, c) = angle.sin_cos();
    let mut out: Vec<T> = v.iter().map(|&x| c * x).collect();
    out[axis] = s * r;
    Ok(out)
}

/// The rotation of one chain step as a linear map on the whole space.
///
/// Acting on a vector `x`, it rotates the component of `x` inside the plane
/// `span{u, ê_axis}` and leaves the orthogonal complement alone. Any basis
/// vector orthogonal to that plane comes back bit-for-bit.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneRotation<T> {
    u: Vec<T>,
    axis: usize,
    angle: T,
}

impl<T: Real> PlaneRotation<T> {
    /// Plane through the direction of `point` and `ê_axis`.
    pub fn new(point: &[T], axis: usize, angle: T) -> Result<Self> {
        if axis >= point.len() {
            return Err(HyperError::AxisOutOfRange {
                axis,
                dim: point.len(),
            });
        }
        if point[axis] != T::zero() {
            return Err(HyperError::NonzeroAxisComponent {
                axis,
                value: point[axis].to_f64().unwrap_or(f64::NAN),
            });
        }
        let r = norm(point);
        if r == T::zero() {
            return Err(HyperError::ZeroModulus);
        }
        Ok(Self {
            u: point.iter().map(|&x| x / r).collect(),
            axis,
            angle,
        })
    }

    pub fn apply(&self, x: &[T]) -> Vec<T> {
        let (s, c) = self.angle.sin_cos();
        let xu = self.u.iter().zip(x).fold(T::zero(), |acc, (&a, &b)| acc + a * b);
        let xe = x[self.axis];
        let cm1 = c - T::one();
        x.iter()
            .enumerate()
            .map(|(i, &xi)| {
                let e = if i == self.axis { T::one() } else { T::zero() };
                let ui = self.u[i];
                xi + (cm1 * (xu * ui + xe * e) + s * (xu * e - xe * ui))
            })
            .collect()
    }
}

/// Radius plus ordered `(axis, angle)` steps in a space of dimension `dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationChain<T> {
    radius: T,
    steps: Vec<(usize, T)>,
    dim: usize,
}

impl<T: Real> RotationChain<T> {
    /// Axes must lie in `1 … dim-1`, be distinct, and be strictly ascending or
    /// strictly descending.
    pub fn new(radius: T, steps: Vec<(usize, T)>, dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(HyperError::DimensionTooSmall(dim));
        }
        if !radius.is_finite() || steps.iter().any(|&(_, a)| !a.is_finite()) {
            return Err(HyperError::NonFinite("rotation chain"));
        }
        if radius < T::zero() {
            return Err(HyperError::NegativeModulus(radius.to_f64().unwrap_or(f64::NAN)));
        }
        if let Some(&(axis, _)) = steps.iter().find(|&&(k, _)| k == 0 || k >= dim) {
            return Err(HyperError::AxisOutOfRange { axis, dim });
        }
        let asc = steps.windows(2).all(|w| w[0].0 < w[1].0);
        let desc = steps.windows(2).all(|w| w[0].0 > w[1].0);
        if !asc && !desc {
            return Err(HyperError::UnorderedSteps);
        }
        Ok(Self { radius, steps, dim })
    }

    /// Full chain over every imaginary axis in the order `o` prescribes;
    /// `angles[k-1]` belongs to axis `k`.
    pub fn from_angles(radius: T, angles: &[T], o: Orientation) -> Result<Self> {
        let dim = angles.len() + 1;
        let steps = o.chain(dim).map(|k| (k, angles[k - 1])).collect();
        Self::new(radius, steps, dim)
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    pub fn steps(&self) -> &[(usize, T)] {
        &self.steps
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Orientation matching the step order. Chains of one step or fewer read
    /// as anticlockwise.
    pub fn orientation(&self) -> Orientation {
        match self.steps.as_slice() {
            [a, b, ..] if a.0 > b.0 => Orientation::Clockwise,
            _ => Orientation::Anticlockwise,
        }
    }

    /// Angle per axis, zero for axes the chain never visits.
    pub fn angles(&self) -> Vec<T> {
        let mut out = vec![T::zero(); self.dim - 1];
        for &(k, a) in &self.steps {
            out[k - 1] = a;
        }
        out
    }
}

/// Final point of the chain.
pub fn build_by_rotations<T: Real>(chain: &RotationChain<T>) -> Result<CartesianHC<T>> {
    let trace = build_traced(chain)?;
    let last = trace.into_iter().last().expect("trace holds the start point");
    Ok(CartesianHC::from_vec_unchecked(last))
}

/// Start point followed by the point after every step.
pub fn build_traced<T: Real>(chain: &RotationChain<T>) -> Result<Vec<Vec<T>>> {
    let mut v = vec![T::zero(); chain.dim];
    v[0] = chain.radius;
    let mut trace = Vec::with_capacity(chain.steps.len() + 1);
    trace.push(v.clone());
    for &(axis, angle) in &chain.steps {
        v = rotate_in_plane(&v, axis, angle)?;
        trace.push(v.clone());
    }
    Ok(trace)
}
