//! Conversions between the coordinate expression and the angle chain.
//!
//! Both orientations share one routine: walking the imaginary axes in chain
//! order, the first axis carries a quadrant-resolved angle in `[0, 2π)` taken
//! against the real coefficient, and every later axis `k` gets
//! `atan(a_k / m)` where `m` is the modulus of the real part plus the axes
//! already visited. Reconstruction multiplies `sin θ` of an axis by the cosines
//! of every angle after it in the chain.

use crate::error::Result;
use crate::number::{CartesianHC, Orientation, PolarHC};
use crate::scalar::{wrap_full, wrap_half, Real};
use crate::tolerance::Tolerance;

/// Euclidean norm of the coefficient vector.
pub fn modulus<T: Real>(s: &CartesianHC<T>) -> T {
    s.coeffs()
        .iter()
        .fold(T::zero(), |acc, &c| acc + c * c)
        .sqrt()
}

/// Principal component arguments θ_1 … θ_{N-1} (indexed by axis − 1).
pub fn arguments<T: Real>(s: &CartesianHC<T>, o: Orientation) -> Vec<T> {
    let a = s.coeffs();
    let dim = a.len();
    let mut angles = vec![T::zero(); dim - 1];
    let mut sub_sq = a[0] * a[0];
    for (pos, axis) in o.chain(dim).enumerate() {
        let ak = a[axis];
        angles[axis - 1] = if pos == 0 {
            wrap_full(ak.atan2(a[0]))
        } else {
            // sub-modulus is non-negative so the result stays in [-π/2, π/2];
            // atan2 also covers the m = 0 pole (±π/2, or 0 when a_k = 0)
            ak.atan2(sub_sq.sqrt()) + T::zero()
        };
        sub_sq = sub_sq + ak * ak;
    }
    angles
}

pub fn to_polar<T: Real>(s: &CartesianHC<T>, o: Orientation) -> PolarHC<T> {
    let r = modulus(s);
    let angles = if r == T::zero() {
        vec![T::zero(); s.dim() - 1]
    } else {
        arguments(s, o)
    };
    PolarHC::from_parts_unchecked(r, angles, o)
}

pub fn from_polar<T: Real>(p: &PolarHC<T>) -> CartesianHC<T> {
    CartesianHC::from_vec_unchecked(chain_to_coeffs(p.modulus(), p.angles(), p.orientation()))
}

/// Coefficients of `r ∏ e^{i_k θ_k}` for an arbitrary (not necessarily
/// canonical) angle chain.
pub fn chain_to_coeffs<T: Real>(r: T, angles: &[T], o: Orientation) -> Vec<T> {
    let dim = angles.len() + 1;
    let mut out = vec![T::zero(); dim];
    // walk the chain backwards keeping the running product of later cosines
    let mut tail = r;
    for pos in (0..dim - 1).rev() {
        let axis = o.axis_at(pos, dim);
        let theta = angles[axis - 1];
        out[axis] = tail * theta.sin();
        tail = tail * theta.cos();
    }
    out[0] = tail;
    out
}

/// Folds an arbitrary angle chain onto the canonical ranges without moving the
/// point it describes.
pub fn canonical_angles<T: Real>(r: T, angles: &[T], o: Orientation) -> Vec<T> {
    let dim = angles.len() + 1;
    if r == T::zero() {
        return vec![T::zero(); dim - 1];
    }
    let half = T::FRAC_PI_2();
    let pi = T::PI();
    let mut out = angles.to_vec();
    for pos in (1..dim - 1).rev() {
        let axis = o.axis_at(pos, dim);
        let theta = wrap_half(out[axis - 1]);
        let folded = if theta > half {
            Some(pi - theta)
        } else if theta < -half {
            Some(-pi - theta)
        } else {
            None
        };
        match folded {
            Some(f) => {
                out[axis - 1] = f;
                // cos θ changed sign: negate the sub-vector spanned by the
                // earlier chain positions
                let first = o.axis_at(0, dim);
                out[first - 1] = out[first - 1] + pi;
                for q in 1..pos {
                    let ax = o.axis_at(q, dim);
                    out[ax - 1] = -out[ax - 1];
                }
            }
            None => out[axis - 1] = theta,
        }
    }
    let first = o.axis_at(0, dim);
    out[first - 1] = wrap_full(out[first - 1]);
    out
}

/// `(a_0, -a_1, …, -a_{N-1})`.
pub fn conjugate<T: Real>(s: &CartesianHC<T>) -> CartesianHC<T> {
    let mut c = s.coeffs().to_vec();
    for x in c.iter_mut().skip(1) {
        *x = -*x;
    }
    CartesianHC::from_vec_unchecked(c)
}

/// Componentwise comparison, each pair within `max(abs_eps, rel_eps · scale)`
/// where `scale` is the largest coefficient magnitude of either operand.
pub fn approx_eq<T: Real>(s1: &CartesianHC<T>, s2: &CartesianHC<T>, t: &Tolerance<T>) -> Result<bool> {
    s1.check_dim(s2)?;
    Ok(slices_close(s1.coeffs(), s2.coeffs(), t))
}

pub(crate) fn slices_close<T: Real>(a: &[T], b: &[T], t: &Tolerance<T>) -> bool {
    let scale = a
        .iter()
        .chain(b.iter())
        .fold(T::zero(), |m, &x| m.max(x.abs()));
    let thr = t.threshold(scale);
    a.iter().zip(b).all(|(&x, &y)| (x - y).abs() <= thr)
}
