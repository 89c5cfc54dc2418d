//! Literal evaluators of the coordinate multiplication and division formulas.
//!
//! These exist to be audited against [`crate::algebra`], never to produce
//! normative results. Each evaluator computes the closed-form coefficient
//! expressions term for term, including the correction terms with their
//! stated summation and product bounds (an empty product is 1). The
//! assembled number takes `a_0` and the `a_k` directly as coefficients, since
//! the absorption rule reduces `i_k a_k ∏_{j<k} e^{i_j θ_j}` to `i_k a_k`.
//!
//! `S(k)` below is the sub-modulus of an operand over the real part and the
//! axes visited before `k` in chain order.

use crate::convert::arguments;
use crate::error::{HyperError, Result};
use crate::number::{CartesianHC, Orientation};
use crate::scalar::Real;

/// Intermediate product term `a_{1k}(a_{20} + Σ i_j a_{2j})` of axis `k`:
/// its modulus and the phases of the second operand's earlier axes.
#[derive(Debug, Clone, PartialEq)]
pub struct SubComponent<T> {
    pub axis: usize,
    pub magnitude: T,
    pub phases: Vec<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoeffBreakdown<T> {
    pub a0: T,
    /// `a_1 … a_{N-1}`
    pub a: Vec<T>,
    /// `θ_1 … θ_{N-1}`
    pub theta: Vec<T>,
    pub sub_components: Vec<SubComponent<T>>,
}

impl<T: Real> CoeffBreakdown<T> {
    pub fn dim(&self) -> usize {
        self.a.len() + 1
    }

    pub fn assembled(&self) -> CartesianHC<T> {
        let mut v = Vec::with_capacity(self.dim());
        v.push(self.a0);
        v.extend_from_slice(&self.a);
        CartesianHC::from_vec_unchecked(v)
    }
}

struct Operands<'a, T> {
    a1: &'a [T],
    a2: &'a [T],
    t1: Vec<T>,
    t2: Vec<T>,
    n: usize,
    o: Orientation,
}

impl<'a, T: Real> Operands<'a, T> {
    fn new(s1: &'a CartesianHC<T>, s2: &'a CartesianHC<T>, o: Orientation) -> Result<Self> {
        s1.check_dim(s2)?;
        Ok(Self {
            a1: s1.coeffs(),
            a2: s2.coeffs(),
            t1: arguments(s1, o),
            t2: arguments(s2, o),
            n: s1.dim(),
            o,
        })
    }

    /// `θ_{1k} + θ_{2k}` indexed by axis
    fn ts(&self, k: usize) -> T {
        self.t1[k - 1] + self.t2[k - 1]
    }

    fn earlier(&self, k: usize) -> Vec<usize> {
        match self.o {
            Orientation::Anticlockwise => (1..k).collect(),
            Orientation::Clockwise => (k + 1..self.n).rev().collect(),
        }
    }

    fn sub_mod(&self, a: &[T], k: usize) -> T {
        self.earlier(k)
            .into_iter()
            .fold(a[0] * a[0], |acc, j| acc + a[j] * a[j])
            .sqrt()
    }

    fn cos_prod(&self, js: impl Iterator<Item = usize>) -> T {
        js.fold(T::one(), |p, j| p * self.ts(j).cos())
    }

    fn sub_components(&self) -> Vec<SubComponent<T>> {
        (1..self.n)
            .map(|k| SubComponent {
                axis: k,
                magnitude: self.a1[k] * self.sub_mod(self.a2, k),
                phases: self.earlier(k).into_iter().map(|j| self.t2[j - 1]).collect(),
            })
            .collect()
    }

    /// product `Σ a_{1k} a_{2k} ∏ cos` term of the general `a_0`
    fn a0_tail(&self) -> T {
        let n = self.n;
        match self.o {
            Orientation::Anticlockwise => (2..n).fold(T::zero(), |acc, k| {
                acc + self.a1[k] * self.a2[k] * self.cos_prod(1..k)
            }),
            Orientation::Clockwise => (1..n - 1).fold(T::zero(), |acc, k| {
                acc + self.a1[k] * self.a2[k] * self.cos_prod(k + 1..n)
            }),
        }
    }

    /// leading pair of the general `a_0`: axis 1 (ccw) or axis N-1 (cw)
    fn a0_lead(&self) -> T {
        let k = self.o.axis_at(0, self.n);
        self.a1[k] * self.a2[k]
    }

    /// correction term attached to `a_k` in the general formulas, without sign
    fn correction(&self, k: usize) -> T {
        let n = self.n;
        match self.o {
            Orientation::Anticlockwise => {
                if k + 2 > n {
                    return T::zero();
                }
                let mut bracket = T::one();
                for i in 1..=(n - k).saturating_sub(2) {
                    bracket = bracket + self.cos_prod(k + 1..=k + i);
                }
                self.a1[k + 1] * self.a2[k + 1] * self.ts(k).sin() * bracket
            }
            Orientation::Clockwise => {
                if k < 2 {
                    return T::zero();
                }
                let mut bracket = T::one();
                for i in k + 2..n {
                    bracket = bracket + self.cos_prod(i - k - 1..=i);
                }
                self.a1[k - 1] * self.a2[k - 1] * self.ts(k).sin() * bracket
            }
        }
    }

    fn norm2_sq(&self) -> Result<T> {
        let m = self.a2.iter().fold(T::zero(), |acc, &x| acc + x * x);
        if m == T::zero() {
            Err(HyperError::DivisionByZero)
        } else {
            Ok(m)
        }
    }
}

/// General multiplication formulas with cosine products and correction terms;
/// `θ_k = θ_{1k} + θ_{2k}`.
pub fn mul_coeffs_general<T: Real>(
    s1: &CartesianHC<T>,
    s2: &CartesianHC<T>,
    o: Orientation,
) -> Result<CoeffBreakdown<T>> {
    let p = Operands::new(s1, s2, o)?;
    let a0 = p.a1[0] * p.a2[0] - p.a0_lead() - p.a0_tail();
    let a = (1..p.n)
        .map(|k| p.a1[k] * p.sub_mod(p.a2, k) + p.a2[k] * p.sub_mod(p.a1, k) - p.correction(k))
        .collect();
    Ok(CoeffBreakdown {
        a0,
        a,
        theta: (1..p.n).map(|k| p.ts(k)).collect(),
        sub_components: p.sub_components(),
    })
}

/// Coordinate-case multiplication: no cosine products, no correction terms.
pub fn mul_coeffs_coordinate<T: Real>(
    s1: &CartesianHC<T>,
    s2: &CartesianHC<T>,
    o: Orientation,
) -> Result<CoeffBreakdown<T>> {
    let p = Operands::new(s1, s2, o)?;
    let dot = (1..p.n).fold(T::zero(), |acc, k| acc + p.a1[k] * p.a2[k]);
    let a = (1..p.n)
        .map(|k| p.a1[k] * p.sub_mod(p.a2, k) + p.a2[k] * p.sub_mod(p.a1, k))
        .collect();
    Ok(CoeffBreakdown {
        a0: p.a1[0] * p.a2[0] - dot,
        a,
        theta: (1..p.n).map(|k| p.ts(k)).collect(),
        sub_components: p.sub_components(),
    })
}

/// General division formulas. The angle rule here is
/// `θ_k = θ_{1k} + θ_{2k}`, unlike the coordinate case.
pub fn div_coeffs_general<T: Real>(
    s1: &CartesianHC<T>,
    s2: &CartesianHC<T>,
    o: Orientation,
) -> Result<CoeffBreakdown<T>> {
    let p = Operands::new(s1, s2, o)?;
    let m = p.norm2_sq()?;
    let a0 = (p.a1[0] * p.a2[0] + p.a0_lead() + p.a0_tail()) / m;
    let a = (1..p.n)
        .map(|k| {
            (p.a1[k] * p.sub_mod(p.a2, k) - p.a2[k] * p.sub_mod(p.a1, k) + p.correction(k)) / m
        })
        .collect();
    Ok(CoeffBreakdown {
        a0,
        a,
        theta: (1..p.n).map(|k| p.ts(k)).collect(),
        sub_components: p.sub_components(),
    })
}

/// Coordinate-case division; `θ_k = θ_{1k} − θ_{2k}`.
pub fn div_coeffs_coordinate<T: Real>(
    s1: &CartesianHC<T>,
    s2: &CartesianHC<T>,
    o: Orientation,
) -> Result<CoeffBreakdown<T>> {
    let p = Operands::new(s1, s2, o)?;
    let m = p.norm2_sq()?;
    let dot = (1..p.n).fold(T::zero(), |acc, k| acc + p.a1[k] * p.a2[k]);
    let a = (1..p.n)
        .map(|k| (p.a1[k] * p.sub_mod(p.a2, k) - p.a2[k] * p.sub_mod(p.a1, k)) / m)
        .collect();
    Ok(CoeffBreakdown {
        a0: (p.a1[0] * p.a2[0] + dot) / m,
        a,
        theta: (1..p.n).map(|k| p.t1[k - 1] - p.t2[k - 1]).collect(),
        sub_components: p.sub_components(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra;
    use crate::convert::approx_eq;
    use crate::tolerance::Tolerance;
    use std::f64::consts::FRAC_PI_2;

    const CCW: Orientation = Orientation::Anticlockwise;
    const CW: Orientation = Orientation::Clockwise;

    type Eval = fn(&CartesianHC<f64>, &CartesianHC<f64>, Orientation) -> Result<CoeffBreakdown<f64>>;
    const ALL: [Eval; 4] = [
        mul_coeffs_general,
        mul_coeffs_coordinate,
        div_coeffs_general,
        div_coeffs_coordinate,
    ];

    fn c(v: &[f64]) -> CartesianHC<f64> {
        CartesianHC::new(v.to_vec()).unwrap()
    }

    fn reversed(s: &CartesianHC<f64>) -> CartesianHC<f64> {
        let mut v = s.coeffs().to_vec();
        v[1..].reverse();
        c(&v)
    }

    fn close(a: &CartesianHC<f64>, b: &CartesianHC<f64>) -> bool {
        approx_eq(a, b, &Tolerance::default()).unwrap()
    }

    #[test]
    fn general_mul_at_two_dims() {
        let b = mul_coeffs_general(&c(&[1.0, 1.0]), &c(&[1.0, 1.0]), CCW).unwrap();
        assert_eq!(b.a0, 0.0);
        assert_eq!(b.a, vec![2.0]);
        assert!((b.theta[0] - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(b.assembled().coeffs(), &[0.0, 2.0]);
    }

    #[test]
    fn unity_reproduces_positive_operand() {
        let s = c(&[0.8, 0.3]);
        let b = mul_coeffs_general(&c(&[1.0, 0.0]), &s, CCW).unwrap();
        assert!(close(&b.assembled(), &s));
    }

    #[test]
    fn coordinate_mul_examples() {
        let b = mul_coeffs_coordinate(&c(&[1.0, 1.0]), &c(&[1.0, 1.0]), CCW).unwrap();
        assert!((b.theta[0] - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(b.assembled().coeffs(), &[0.0, 2.0]);

        let b = mul_coeffs_coordinate(&c(&[1.0, 0.0, 0.0]), &c(&[1.0, 0.0, 0.0]), CCW).unwrap();
        assert_eq!(b.assembled().coeffs(), &[1.0, 0.0, 0.0]);

        // the square roots drop the sign of a_0: (-1 + i)² = -2i classically
        let s = c(&[-1.0, 1.0]);
        let b = mul_coeffs_coordinate(&s, &s, CCW).unwrap();
        assert_eq!(b.a, vec![2.0]);
        let normative = algebra::mul(&s, &s, CCW).unwrap();
        assert!((normative.coeffs()[1] + 2.0).abs() < 1e-12);
        assert!(!close(&b.assembled(), &normative));
    }

    #[test]
    fn division_examples() {
        let s = c(&[0.6, 0.9]);
        for f in [div_coeffs_general, div_coeffs_coordinate] {
            let b = f(&s, &s, CCW).unwrap();
            assert!((b.a0 - 1.0).abs() < 1e-15);
            assert!(b.a[0].abs() < 1e-15);
            assert!(close(&f(&c(&[0.0, 2.0]), &c(&[1.0, 1.0]), CCW).unwrap().assembled(), &c(&[1.0, 1.0])));
            assert_eq!(f(&s, &c(&[0.0, 0.0]), CCW), Err(HyperError::DivisionByZero));
        }
        let b = div_coeffs_coordinate(&c(&[0.0, 2.0]), &c(&[1.0, 1.0]), CCW).unwrap();
        assert!((b.theta[0] - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        let b = div_coeffs_general(&c(&[0.0, 2.0]), &c(&[1.0, 1.0]), CCW).unwrap();
        assert!((b.theta[0] - 3.0 * std::f64::consts::FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        for f in ALL {
            assert!(matches!(
                f(&c(&[1.0, 0.0]), &c(&[1.0, 0.0, 0.0]), CCW),
                Err(HyperError::DimensionMismatch { .. })
            ));
        }
    }

    #[test]
    fn sub_components_hold_intermediate_terms() {
        let s1 = c(&[0.5, 0.2, 0.7]);
        let s2 = c(&[0.4, 0.3, 0.1]);
        let b = mul_coeffs_general(&s1, &s2, CCW).unwrap();
        assert_eq!(b.sub_components.len(), 2);
        let sc = &b.sub_components[1];
        assert_eq!(sc.axis, 2);
        assert!((sc.magnitude - 0.7 * 0.5).abs() < 1e-15);
        assert_eq!(sc.phases.len(), 1);
    }

    #[test]
    fn evaluation_is_bit_deterministic() {
        let s1 = c(&[0.5, -0.2, 0.7, 0.1]);
        let s2 = c(&[0.4, 0.3, -0.1, 0.9]);
        for f in ALL {
            for o in [CCW, CW] {
                assert_eq!(f(&s1, &s2, o).unwrap(), f(&s1, &s2, o).unwrap());
            }
        }
    }

    #[test]
    fn mirror_symmetry_at_low_dims() {
        let pairs = [
            (c(&[0.5, 0.3]), c(&[0.7, -0.2])),
            (c(&[0.5, 0.3, 0.2]), c(&[0.7, -0.2, 0.6])),
            (c(&[-0.4, 0.9, -0.3]), c(&[0.1, 0.2, 0.8])),
        ];
        for (s1, s2) in &pairs {
            for f in ALL {
                let ccw = f(s1, s2, CCW).unwrap().assembled();
                let cw = f(&reversed(s1), &reversed(s2), CW).unwrap().assembled();
                assert!(close(&cw, &reversed(&ccw)), "{ccw} vs {cw}");
            }
        }
    }

    #[test]
    fn mirror_breaks_at_four_dims_with_stated_bounds() {
        // the clockwise bracket runs its products over j = i-k-1 … i, which is
        // not the index reversal of the anticlockwise j = k+1 … k+i
        let s1 = c(&[0.5, 0.3, 0.2, 0.6]);
        let s2 = c(&[0.7, -0.2, 0.6, 0.4]);
        let ccw = mul_coeffs_general(&s1, &s2, CCW).unwrap().assembled();
        let cw = mul_coeffs_general(&reversed(&s1), &reversed(&s2), CW).unwrap().assembled();
        assert!(!close(&cw, &reversed(&ccw)));
        // coordinate forms have no bracket and stay mirrored
        let ccw = mul_coeffs_coordinate(&s1, &s2, CCW).unwrap().assembled();
        let cw = mul_coeffs_coordinate(&reversed(&s1), &reversed(&s2), CW).unwrap().assembled();
        assert!(close(&cw, &reversed(&ccw)));
    }
}
