//! The three-dimensional space complex numbers `a + ib + jc`.
//!
//! Polar form `|s| (cos θ + i sin θ) e^{i_j φ}` with the master angle θ off the
//! real axis and the slave angle φ measured from the `b` axis toward the `c`
//! axis. Because `r = sqrt(b² + c²) ≥ 0`, θ stays in `[0, π]` and φ takes the
//! full turn `[0, 2π)`. The `j` unit satisfies `j² = -1` with a 4-cycle of
//! powers.
//!
//! As in the N-dimensional case, multiplication and its relatives act on the
//! exponent form ([`ExpForm3`]): moduli multiply, both angles add.

use std::fmt;

use crate::error::{HyperError, Result};
use crate::scalar::{wrap_full, wrap_half, Real};

/// Cartesian `a + ib + jc`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Space3<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Real> Space3<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(HyperError::NonFinite("space3 coefficients"));
        }
        Ok(Self { a, b, c })
    }

    pub fn real(a: T) -> Self {
        Self {
            a,
            b: T::zero(),
            c: T::zero(),
        }
    }

    pub fn i() -> Self {
        Self {
            a: T::zero(),
            b: T::one(),
            c: T::zero(),
        }
    }

    pub fn j() -> Self {
        Self {
            a: T::zero(),
            b: T::zero(),
            c: T::one(),
        }
    }

    pub fn modulus(&self) -> T {
        (self.a * self.a + self.b * self.b + self.c * self.c).sqrt()
    }

    pub fn coeffs(&self) -> [T; 3] {
        [self.a, self.b, self.c]
    }

    /// `(a, -b, -c)`
    pub fn conj(&self) -> Self {
        conj3(self)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            a: self.a + o.a,
            b: self.b + o.b,
            c: self.c + o.c,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
            c: -self.c,
        }
    }
}

impl<T: Real> fmt::Display for Space3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s3[{}, {}, {}]", self.a, self.b, self.c)
    }
}

/// Canonical polar form: θ ∈ `[0, π]`, φ ∈ `[0, 2π)`, φ = 0 on the real axis,
/// all zero for the zero number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Space3Polar<T> {
    modulus: T,
    theta: T,
    phi: T,
}

impl<T: Real> Space3Polar<T> {
    /// Folds arbitrary angles onto the canonical ranges without moving the point.
    pub fn new(modulus: T, theta: T, phi: T) -> Result<Self> {
        if !(modulus.is_finite() && theta.is_finite() && phi.is_finite()) {
            return Err(HyperError::NonFinite("space3 polar components"));
        }
        if modulus < T::zero() {
            return Err(HyperError::NegativeModulus(modulus.to_f64().unwrap_or(f64::NAN)));
        }
        let (theta, phi) = canonical3(modulus, theta, phi);
        Ok(Self {
            modulus,
            theta,
            phi,
        })
    }

    pub fn modulus(&self) -> T {
        self.modulus
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn phi(&self) -> T {
        self.phi
    }

    pub fn to_cartesian(&self) -> Space3<T> {
        from_polar3(self)
    }
}

impl<T: Real> fmt::Display for Space3Polar<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s3p[{}; {}, {}]", self.modulus, self.theta, self.phi)
    }
}

fn canonical3<T: Real>(r: T, theta: T, phi: T) -> (T, T) {
    if r == T::zero() {
        return (T::zero(), T::zero());
    }
    let mut theta = wrap_half(theta);
    let mut phi = phi;
    if theta < T::zero() {
        theta = -theta;
        phi = phi + T::PI();
    }
    if theta == T::zero() || theta == T::PI() {
        return (theta, T::zero());
    }
    (theta, wrap_full(phi))
}

fn coords<T: Real>(r: T, theta: T, phi: T) -> Space3<T> {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    Space3 {
        a: r * ct,
        b: r * st * cp,
        c: r * st * sp,
    }
}

pub fn to_polar3<T: Real>(s: &Space3<T>) -> Space3Polar<T> {
    let modulus = s.modulus();
    if modulus == T::zero() {
        return Space3Polar {
            modulus,
            theta: T::zero(),
            phi: T::zero(),
        };
    }
    let r = (s.b * s.b + s.c * s.c).sqrt();
    let theta = r.atan2(s.a) + T::zero();
    let phi = if r == T::zero() {
        T::zero()
    } else {
        wrap_full(s.c.atan2(s.b))
    };
    Space3Polar {
        modulus,
        theta,
        phi,
    }
}

pub fn from_polar3<T: Real>(p: &Space3Polar<T>) -> Space3<T> {
    coords(p.modulus, p.theta, p.phi)
}

/// `c e^{iθ} = c_r + i c_i` with θ the number's own master angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlaveDecomposition<T> {
    pub c_r: T,
    pub c_i: T,
}

pub fn slave_decompose<T: Real>(s: &Space3<T>) -> SlaveDecomposition<T> {
    let (st, ct) = to_polar3(s).theta.sin_cos();
    SlaveDecomposition {
        c_r: s.c * ct,
        c_i: s.c * st,
    }
}

pub fn conj3<T: Real>(s: &Space3<T>) -> Space3<T> {
    Space3 {
        a: s.a,
        b: -s.b,
        c: -s.c,
    }
}

/// One of `1, j, -1, -j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JPower {
    One,
    J,
    MinusOne,
    MinusJ,
}

impl JPower {
    pub fn to_space3<T: Real>(self) -> Space3<T> {
        let (o, z) = (T::one(), T::zero());
        match self {
            JPower::One => Space3::real(o),
            JPower::J => Space3::j(),
            JPower::MinusOne => Space3::real(-o),
            JPower::MinusJ => Space3 { a: z, b: z, c: -o },
        }
    }
}

impl fmt::Display for JPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JPower::One => "1",
            JPower::J => "j",
            JPower::MinusOne => "-1",
            JPower::MinusJ => "-j",
        })
    }
}

pub fn j_pow(n: i64) -> JPower {
    match n.rem_euclid(4) {
        0 => JPower::One,
        1 => JPower::J,
        2 => JPower::MinusOne,
        _ => JPower::MinusJ,
    }
}

/// Modulus with raw master and slave angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpForm3<T> {
    modulus: T,
    theta: T,
    phi: T,
}

impl<T: Real> ExpForm3<T> {
    pub fn new(modulus: T, theta: T, phi: T) -> Result<Self> {
        if !(modulus.is_finite() && theta.is_finite() && phi.is_finite()) {
            return Err(HyperError::NonFinite("space3 exponent form"));
        }
        if modulus < T::zero() {
            return Err(HyperError::NegativeModulus(modulus.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self {
            modulus,
            theta,
            phi,
        })
    }

    pub fn from_cartesian(s: &Space3<T>) -> Self {
        Self::from_polar(&to_polar3(s))
    }

    pub fn from_polar(p: &Space3Polar<T>) -> Self {
        Self {
            modulus: p.modulus,
            theta: p.theta,
            phi: p.phi,
        }
    }

    pub fn modulus(&self) -> T {
        self.modulus
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn phi(&self) -> T {
        self.phi
    }

    pub fn to_cartesian(&self) -> Space3<T> {
        coords(self.modulus, self.theta, self.phi)
    }

    pub fn to_polar(&self) -> Space3Polar<T> {
        let (theta, phi) = canonical3(self.modulus, self.theta, self.phi);
        Space3Polar {
            modulus: self.modulus,
            theta,
            phi,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            modulus: self.modulus * o.modulus,
            theta: self.theta + o.theta,
            phi: self.phi + o.phi,
        }
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.modulus == T::zero() {
            return Err(HyperError::DivisionByZero);
        }
        Ok(Self {
            modulus: self.modulus / o.modulus,
            theta: self.theta - o.theta,
            phi: self.phi - o.phi,
        })
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        if n < 0 && self.modulus == T::zero() {
            return Err(HyperError::DivisionByZero);
        }
        let k = T::from_i32(n).expect("i32 fits every float type");
        Ok(Self {
            modulus: self.modulus.powi(n),
            theta: self.theta * k,
            phi: self.phi * k,
        })
    }

    /// `(θ + 2mπ)/n` and `(φ + 2mπ)/n` for `m = 0 … n-1`.
    pub fn nth_roots(&self, n: u32) -> Result<Vec<Self>> {
        if n == 0 {
            return Err(HyperError::InvalidRootIndex(0));
        }
        let nf = T::from_u32(n).expect("u32 fits every float type");
        let modulus = self.modulus.powf(nf.recip());
        Ok((0..n)
            .map(|m| {
                if self.modulus == T::zero() {
                    return Self {
                        modulus,
                        theta: T::zero(),
                        phi: T::zero(),
                    };
                }
                let shift = T::TAU() * T::from_u32(m).expect("u32 fits");
                Self {
                    modulus,
                    theta: (self.theta + shift) / nf,
                    phi: (self.phi + shift) / nf,
                }
            })
            .collect())
    }

    /// `(r, -θ, φ)`: the same point as `conj3` of the coefficients, and the
    /// chain that makes `s · s̄` real.
    pub fn conj(&self) -> Self {
        Self {
            modulus: self.modulus,
            theta: -self.theta,
            phi: self.phi,
        }
    }
}

pub fn mul3<T: Real>(s1: &Space3<T>, s2: &Space3<T>) -> Space3<T> {
    ExpForm3::from_cartesian(s1)
        .mul(&ExpForm3::from_cartesian(s2))
        .to_cartesian()
}

pub fn div3<T: Real>(s1: &Space3<T>, s2: &Space3<T>) -> Result<Space3<T>> {
    Ok(ExpForm3::from_cartesian(s1)
        .div(&ExpForm3::from_cartesian(s2))?
        .to_cartesian())
}

/// `s^n` and the `n` roots of `s`.
pub fn pow_roots3<T: Real>(s: &Space3<T>, n: u32) -> Result<(Space3<T>, Vec<Space3<T>>)> {
    let e = ExpForm3::from_cartesian(s);
    let power = e
        .pow(i32::try_from(n).map_err(|_| HyperError::InvalidRootIndex(i64::from(n)))?)?
        .to_cartesian();
    let roots = e.nth_roots(n)?.iter().map(ExpForm3::to_cartesian).collect();
    Ok((power, roots))
}

/// Literal evaluation of the coefficient product or quotient, with its
/// intermediate quantities.
///
/// `value` assembles `a + ib + j·Re(c e^{iθ})`; the imaginary part of
/// `c e^{iθ}` has no axis of its own and is kept as `residual`. `absorbed`
/// is the alternative reading that drops the phase and keeps `c` as is.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Space3Coeffs<T> {
    pub value: Space3<T>,
    pub a: T,
    pub b: T,
    pub c: T,
    pub theta: T,
    pub c_r: T,
    pub c_i: T,
    pub residual: T,
    pub absorbed: Space3<T>,
}

struct Parts<T> {
    a: T,
    b: T,
    c: T,
    r: T,
    theta: T,
    cr: T,
    ci: T,
}

fn parts<T: Real>(s: &Space3<T>) -> Parts<T> {
    let theta = to_polar3(s).theta;
    let d = slave_decompose(s);
    Parts {
        a: s.a,
        b: s.b,
        c: s.c,
        r: (s.a * s.a + s.b * s.b).sqrt(),
        theta,
        cr: d.c_r,
        ci: d.c_i,
    }
}

fn assemble<T: Real>(a: T, b: T, c: T, theta: T, c_r: T, c_i: T) -> Space3Coeffs<T> {
    let (st, ct) = theta.sin_cos();
    Space3Coeffs {
        value: Space3 { a, b, c: c * ct },
        a,
        b,
        c,
        theta,
        c_r,
        c_i,
        residual: c * st,
        absorbed: Space3 { a, b, c },
    }
}

pub fn mul3_paper_coeffs<T: Real>(s1: &Space3<T>, s2: &Space3<T>) -> Space3Coeffs<T> {
    let (p, q) = (parts(s1), parts(s2));
    let a = p.a * q.a - p.b * q.b - p.cr * q.cr + p.ci * q.ci;
    let b = p.b * q.a + q.b * p.a - p.cr * q.ci - p.ci * q.cr;
    let c = p.c * q.r + q.c * p.r;
    let c_r = p.cr * q.a + q.cr * p.a - p.ci * q.b - q.ci * p.b;
    let c_i = p.ci * q.a + q.ci * p.a + p.cr * q.b + q.cr * p.b;
    assemble(a, b, c, p.theta + q.theta, c_r, c_i)
}

/// The `b` coefficient follows the line-by-line expansion,
/// `b_1 a_2 − b_2 a_1`, which is the sign that reduces to classic complex
/// division when `c = 0`.
pub fn div3_paper_coeffs<T: Real>(s1: &Space3<T>, s2: &Space3<T>) -> Result<Space3Coeffs<T>> {
    let m = s2.a * s2.a + s2.b * s2.b + s2.c * s2.c;
    if m == T::zero() {
        return Err(HyperError::DivisionByZero);
    }
    let (p, q) = (parts(s1), parts(s2));
    let a = (p.a * q.a + p.b * q.b + p.cr * q.cr + p.ci * q.ci) / m;
    let b = (p.b * q.a - q.b * p.a + p.cr * q.ci - p.ci * q.cr) / m;
    let c = (p.c * q.r - q.c * p.r) / m;
    let c_r = ((p.cr * q.a - q.cr * p.a) + (p.ci * q.b - q.ci * p.b)) / m;
    let c_i = ((p.ci * q.a + q.ci * p.a) - (p.cr * q.b + q.cr * p.b)) / m;
    Ok(assemble(a, b, c, p.theta - q.theta, c_r, c_i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

    fn s(a: f64, b: f64, c: f64) -> Space3<f64> {
        Space3::new(a, b, c).unwrap()
    }

    fn close(x: &Space3<f64>, y: &Space3<f64>, eps: f64) -> bool {
        x.coeffs().iter().zip(y.coeffs()).all(|(p, q)| (p - q).abs() <= eps)
    }

    #[test]
    fn j_power_cycle() {
        assert_eq!(j_pow(2), JPower::MinusOne);
        assert_eq!(j_pow(0), JPower::One);
        assert_eq!(j_pow(-1), JPower::MinusJ);
        for n in -8..=8 {
            assert_eq!(j_pow(n), j_pow(n.rem_euclid(4)));
        }
        assert_eq!(JPower::MinusJ.to_space3::<f64>(), s(0.0, 0.0, -1.0));
    }

    #[test]
    fn to_polar_examples() {
        let p = to_polar3(&s(1.0, 0.0, 0.0));
        assert_eq!((p.modulus(), p.theta(), p.phi()), (1.0, 0.0, 0.0));
        let p = to_polar3(&s(0.0, 0.0, 2.0));
        assert_eq!((p.modulus(), p.theta(), p.phi()), (2.0, FRAC_PI_2, FRAC_PI_2));
        let p = to_polar3(&s(1.0, 1.0, 1.0));
        assert!((p.modulus() - 3f64.sqrt()).abs() < 1e-15);
        assert!((p.theta() - 2f64.sqrt().atan()).abs() < 1e-15);
        assert!((p.phi() - FRAC_PI_4).abs() < 1e-15);
        assert!(close(&from_polar3(&p), &s(1.0, 1.0, 1.0), 1e-15));
        let p = to_polar3(&s(-2.0, 0.0, 0.0));
        assert_eq!((p.theta(), p.phi()), (PI, 0.0));
        assert_eq!(to_polar3(&s(0.0, 0.0, 0.0)), Space3Polar::new(0.0, 0.0, 0.0).unwrap());
    }

    #[test]
    fn from_polar_examples() {
        let p = Space3Polar::new(2.0, FRAC_PI_2, 0.0).unwrap();
        assert!(close(&from_polar3(&p), &s(0.0, 2.0, 0.0), 1e-15));
        let p = Space3Polar::new(1.0, 0.0, 1.7).unwrap();
        assert_eq!(p.phi(), 0.0);
        assert_eq!(from_polar3(&p), s(1.0, 0.0, 0.0));
        let p = Space3Polar::new(1.0, FRAC_PI_2, FRAC_PI_2).unwrap();
        assert!(close(&from_polar3(&p), &s(0.0, 0.0, 1.0), 1e-15));
    }

    #[test]
    fn canonical_fold_keeps_point() {
        for &(t, f) in &[(-0.7, 0.3), (4.0, -1.0), (-3.0, 7.0), (PI, 2.0)] {
            let q = Space3Polar::new(1.3, t, f).unwrap();
            assert!((0.0..=PI).contains(&q.theta()));
            assert!((0.0..2.0 * PI).contains(&q.phi()));
            assert!(close(&q.to_cartesian(), &coords(1.3, t, f), 1e-14));
        }
        let canon = Space3Polar::new(2.0_f64, 1.1, 5.9).unwrap();
        let again = Space3Polar::new(2.0, canon.theta(), canon.phi()).unwrap();
        assert_eq!(canon.theta().to_bits(), again.theta().to_bits());
        assert_eq!(canon.phi().to_bits(), again.phi().to_bits());
    }

    #[test]
    fn slave_decompose_examples() {
        let d = slave_decompose(&s(0.0, 0.0, 1.0));
        assert!(d.c_r.abs() < 1e-16 && (d.c_i - 1.0).abs() < 1e-16);
        assert_eq!(slave_decompose(&s(1.0, 0.0, 0.0)), SlaveDecomposition { c_r: 0.0, c_i: 0.0 });
        let x = s(1.0, 1.0, 2f64.sqrt());
        let d = slave_decompose(&x);
        let theta = 3f64.sqrt().atan();
        assert!((d.c_r - 2f64.sqrt() * theta.cos()).abs() < 1e-15);
        assert!((d.c_i - 2f64.sqrt() * theta.sin()).abs() < 1e-15);
        assert!((d.c_r.powi(2) + d.c_i.powi(2) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn conj_examples() {
        assert_eq!(conj3(&s(1.0, 2.0, 3.0)), s(1.0, -2.0, -3.0));
        assert_eq!(conj3(&s(5.0, 0.0, 0.0)), s(5.0, -0.0, -0.0));
        let x = s(0.3, -1.1, 0.8);
        let e = ExpForm3::from_cartesian(&x);
        assert!(close(&e.conj().to_cartesian(), &conj3(&x), 1e-15));
        let m2 = x.modulus().powi(2);
        assert!(close(&e.mul(&e.conj()).to_cartesian(), &s(m2, 0.0, 0.0), 1e-14));
    }

    #[test]
    fn mul_examples() {
        let i = Space3::<f64>::i();
        assert!(close(&mul3(&i, &i), &s(-1.0, 0.0, 0.0), 1e-15));

        let p = ExpForm3::new(2.0_f64, 0.3, 0.4).unwrap().mul(&ExpForm3::new(3.0, 0.1, 0.2).unwrap());
        assert_eq!(p.modulus(), 6.0);
        assert!((p.theta() - 0.4).abs() < 1e-15 && (p.phi() - 0.6).abs() < 1e-15);

        let ij = ExpForm3::from_cartesian(&i).mul(&ExpForm3::from_cartesian(&Space3::j()));
        assert!((ij.theta() - PI).abs() < 1e-15 && (ij.phi() - FRAC_PI_2).abs() < 1e-15);
        assert!(close(&ij.to_cartesian(), &s(-1.0, 0.0, 0.0), 1e-15));
    }

    #[test]
    fn div_examples() {
        let x = s(0.3, -1.1, 0.8);
        assert!(close(&div3(&x, &x).unwrap(), &s(1.0, 0.0, 0.0), 1e-15));
        assert!(close(&div3(&s(-1.0, 0.0, 0.0), &Space3::i()).unwrap(), &Space3::i(), 1e-15));
        assert_eq!(div3(&x, &s(0.0, 0.0, 0.0)), Err(HyperError::DivisionByZero));
        let (e1, e2) = (ExpForm3::from_cartesian(&x), ExpForm3::from_cartesian(&s(1.2, 0.4, -0.5)));
        assert!(close(&e1.div(&e2).unwrap().mul(&e2).to_cartesian(), &x, 1e-14));
    }

    #[test]
    fn pow_roots_examples() {
        let e = ExpForm3::new(1.0, FRAC_PI_3, 0.0).unwrap();
        let (power, _) = pow_roots3(&e.to_cartesian(), 3).unwrap();
        assert!(close(&power, &s(-1.0, 0.0, 0.0), 1e-15));

        let (sq, roots) = pow_roots3(&s(1.0, 0.0, 0.0), 2).unwrap();
        assert!(close(&sq, &s(1.0, 0.0, 0.0), 1e-15));
        assert!(close(&roots[0], &s(1.0, 0.0, 0.0), 1e-15));
        assert!(close(&roots[1], &s(-1.0, 0.0, 0.0), 1e-15));
        let second = ExpForm3::new(1.0, 0.0, 0.0).unwrap().nth_roots(2).unwrap()[1];
        assert!(close(&second.pow(2).unwrap().to_cartesian(), &s(1.0, 0.0, 0.0), 1e-15));

        let x = s(0.3, 0.9, -0.2);
        let (p1, r1) = pow_roots3(&x, 1).unwrap();
        assert!(close(&p1, &x, 1e-15) && close(&r1[0], &x, 1e-15));
    }

    #[test]
    fn coefficient_route_reduces_to_classic_when_flat() {
        let (x, y) = (s(0.6, 0.8, 0.0), s(-0.3, 1.4, 0.0));
        let m = mul3_paper_coeffs(&x, &y).value;
        assert!(close(&m, &s(0.6 * -0.3 - 0.8 * 1.4, 0.8 * -0.3 + 1.4 * 0.6, 0.0), 1e-15));
        let q = div3_paper_coeffs(&x, &x).unwrap().value;
        assert!(close(&q, &s(1.0, 0.0, 0.0), 1e-15));
        let d = div3_paper_coeffs(&x, &y).unwrap().value;
        let den = 0.09 + 1.96;
        assert!(close(&d, &s((0.6 * -0.3 + 0.8 * 1.4) / den, (0.8 * -0.3 - 1.4 * 0.6) / den, 0.0), 1e-15));
        assert_eq!(div3_paper_coeffs(&x, &s(0.0, 0.0, 0.0)), Err(HyperError::DivisionByZero));
    }

    #[test]
    fn coefficient_route_gives_minus_j_for_i_times_j() {
        let k = mul3_paper_coeffs(&Space3::<f64>::i(), &Space3::j());
        assert_eq!(k.c, 1.0);
        assert!((k.theta - PI).abs() < 1e-15);
        assert!(close(&k.value, &s(0.0, 0.0, -1.0), 1e-15));
        assert!(k.residual.abs() < 1e-15);
        assert!(close(&mul3(&Space3::i(), &Space3::j()), &s(-1.0, 0.0, 0.0), 1e-15));
    }
}
