//! Scalar abstraction shared by every module.
//!
//! All arithmetic is generic over [`Real`], implemented for `f32` and `f64`.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point scalar usable as a coefficient or angle.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` constant into `Self`.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant must be representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Wraps an angle into `[0, 2π)`. Values already in range are returned unchanged.
pub fn wrap_full<T: Real>(x: T) -> T {
    let two_pi = T::TAU();
    if x >= T::zero() && x < two_pi {
        return x + T::zero();
    }
    let mut y = x % two_pi;
    if y < T::zero() {
        y = y + two_pi;
    }
    if y >= two_pi {
        y = y - two_pi;
    }
    y + T::zero()
}

/// Wraps an angle into `(-π, π]`. Values already in range are returned unchanged.
pub fn wrap_half<T: Real>(x: T) -> T {
    let pi = T::PI();
    if x > -pi && x <= pi {
        return x + T::zero();
    }
    let y = wrap_full(x);
    if y > pi {
        y - T::TAU()
    } else {
        y
    }
}

/// Distance between two angles on the circle, in `[0, π]`.
pub fn angular_distance<T: Real>(a: T, b: T) -> T {
    let d = wrap_full(a - b);
    d.min(T::TAU() - d)
}
