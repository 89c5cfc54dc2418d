//! Lifting an n-dimensional number to n + 1 dimensions.
//!
//! `c_{n+1} = c_n + i_n (a_n / |c_n|) c_n`. The dual copy `(a_n/|c_n|) c_n`
//! has modulus `|a_n|` and carries the whole angle chain of `c_n`, which the
//! new unit `i_n` absorbs, so in coordinates the lift simply appends `a_n`.

use crate::convert::to_polar;
use crate::error::{HyperError, Result};
use crate::number::{CartesianHC, Orientation, PolarHC};
use crate::scalar::Real;

pub fn lift<T: Real>(c: &CartesianHC<T>, a_new: T) -> Result<CartesianHC<T>> {
    if !a_new.is_finite() {
        return Err(HyperError::NonFinite("lift coefficient"));
    }
    if c.modulus() == T::zero() {
        return Err(HyperError::ZeroModulus);
    }
    let mut v = c.coeffs().to_vec();
    v.push(a_new);
    Ok(CartesianHC::from_vec_unchecked(v))
}

/// Polar form of the lift: modulus `sqrt(|c|² + a²)`; for the anticlockwise
/// chain the angles of `c` are kept and `atan(a/|c|)` is appended for the new
/// axis. The clockwise chain starts at the new axis, so there the result is
/// recomputed from coordinates.
pub fn lift_polar<T: Real>(p: &PolarHC<T>, a_new: T) -> Result<PolarHC<T>> {
    let r = p.modulus();
    if r == T::zero() {
        return Err(HyperError::ZeroModulus);
    }
    if !a_new.is_finite() {
        return Err(HyperError::NonFinite("lift coefficient"));
    }
    match p.orientation() {
        Orientation::Anticlockwise => {
            let modulus = r.hypot(a_new);
            let mut angles = p.angles().to_vec();
            angles.push(a_new.atan2(r));
            PolarHC::new(modulus, angles, Orientation::Anticlockwise)
        }
        Orientation::Clockwise => Ok(to_polar(&lift(&p.to_cartesian(), a_new)?, Orientation::Clockwise)),
    }
}

/// Every stage of the tower built from `base` by lifting with each of `rest`
/// in turn, starting with `base` itself.
pub fn tower<T: Real>(base: &CartesianHC<T>, rest: &[T]) -> Result<Vec<CartesianHC<T>>> {
    let mut out = vec![base.clone()];
    for &a in rest {
        let next = lift(out.last().expect("tower is never empty"), a)?;
        out.push(next);
    }
    Ok(out)
}
