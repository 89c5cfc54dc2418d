//! One sample of one law: draw operands, evaluate both sides.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use hyperspace::algebra::{self, ExpForm};
use hyperspace::convert::{conjugate, modulus};
use hyperspace::json::Number;
use hyperspace::paper_formulas as pf;
use hyperspace::space3::{self, ExpForm3, Space3};
use hyperspace::{Cartesian, Orientation, Tolerance};
use num_complex::Complex64;

use crate::sample::Sampler;
use crate::Law;

/// Relative tolerance pinned for modulus multiplicativity.
pub const MODULUS_REL: f64 = 1e-12;

pub struct Check {
    pub label: &'static str,
    pub lhs: Vec<f64>,
    pub rhs: Vec<f64>,
    pub tol: Tolerance<f64>,
}

impl Check {
    fn scale(&self) -> f64 {
        self.lhs
            .iter()
            .chain(&self.rhs)
            .fold(0.0f64, |m, x| m.max(x.abs()))
    }

    fn max_diff(&self) -> f64 {
        if self.lhs.len() != self.rhs.len() {
            return f64::INFINITY;
        }
        self.lhs
            .iter()
            .zip(&self.rhs)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn passes(&self) -> bool {
        self.max_diff() <= self.tol.threshold(self.scale())
    }

    /// Largest coefficient difference relative to the largest coefficient
    /// (absolute when both sides vanish).
    pub fn deviation(&self) -> f64 {
        let d = self.max_diff();
        let s = self.scale();
        if s > 0.0 {
            d / s
        } else {
            d
        }
    }
}

pub struct Outcome {
    pub operands: Vec<Number>,
    pub params: BTreeMap<String, i64>,
    pub checks: Vec<Check>,
}

fn cv(c: &Cartesian) -> Vec<f64> {
    c.coeffs().to_vec()
}

fn sv(s: &Space3<f64>) -> Vec<f64> {
    s.coeffs().to_vec()
}

fn real(dim: usize, x: f64) -> Vec<f64> {
    let mut v = vec![0.0; dim];
    v[0] = x;
    v
}

fn cz(z: Complex64) -> Vec<f64> {
    vec![z.re, z.im]
}

pub struct Ctx<'a> {
    pub dim: usize,
    pub orientation: Orientation,
    pub tol: &'a Tolerance<f64>,
}

impl Ctx<'_> {
    fn check(&self, label: &'static str, lhs: Vec<f64>, rhs: Vec<f64>) -> Check {
        Check {
            label,
            lhs,
            rhs,
            tol: *self.tol,
        }
    }

    fn exp(&self, s: &Cartesian) -> ExpForm<f64> {
        ExpForm::from_cartesian(s, self.orientation)
    }
}

fn nums(cs: &[&Cartesian]) -> Vec<Number> {
    cs.iter().map(|&c| Number::from(c.clone())).collect()
}

fn params(p: &[(&str, i64)]) -> BTreeMap<String, i64> {
    p.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Operands stay within finite range and away from zero moduli, so the
/// arithmetic cannot fail; an error here is a bug.
const INFALLIBLE: &str = "sampled operands are valid";

pub fn evaluate(law: Law, ctx: &Ctx<'_>, s: &mut Sampler) -> Outcome {
    let (n, o) = (ctx.dim, ctx.orientation);
    let mut par = BTreeMap::new();
    let (operands, checks) = match law {
        Law::AddCommutative => {
            let (a, b) = (s.cartesian(n), s.cartesian(n));
            let l = algebra::add(&a, &b).expect(INFALLIBLE);
            let r = algebra::add(&b, &a).expect(INFALLIBLE);
            (nums(&[&a, &b]), vec![ctx.check("a+b = b+a", cv(&l), cv(&r))])
        }
        Law::AddAssociative => {
            let (a, b, c) = (s.cartesian(n), s.cartesian(n), s.cartesian(n));
            let l = algebra::add(&algebra::add(&a, &b).expect(INFALLIBLE), &c).expect(INFALLIBLE);
            let r = algebra::add(&a, &algebra::add(&b, &c).expect(INFALLIBLE)).expect(INFALLIBLE);
            (nums(&[&a, &b, &c]), vec![ctx.check("(a+b)+c = a+(b+c)", cv(&l), cv(&r))])
        }
        Law::MulCommutative => {
            let (a, b) = (s.cartesian(n), s.cartesian(n));
            let l = algebra::mul(&a, &b, o).expect(INFALLIBLE);
            let r = algebra::mul(&b, &a, o).expect(INFALLIBLE);
            (nums(&[&a, &b]), vec![ctx.check("ab = ba", cv(&l), cv(&r))])
        }
        Law::MulAssociative => {
            let (a, b, c) = (s.cartesian(n), s.cartesian(n), s.cartesian(n));
            let (ea, eb, ec) = (ctx.exp(&a), ctx.exp(&b), ctx.exp(&c));
            let l = ea.mul(&eb).and_then(|x| x.mul(&ec)).expect(INFALLIBLE);
            let r = eb.mul(&ec).and_then(|x| ea.mul(&x)).expect(INFALLIBLE);
            (
                nums(&[&a, &b, &c]),
                vec![ctx.check("(ab)c = a(bc)", cv(&l.to_cartesian()), cv(&r.to_cartesian()))],
            )
        }
        Law::MulAssociativeValue => {
            let (a, b, c) = (s.cartesian(n), s.cartesian(n), s.cartesian(n));
            let m = |x: &Cartesian, y: &Cartesian| algebra::mul(x, y, o).expect(INFALLIBLE);
            let l = m(&m(&a, &b), &c);
            let r = m(&a, &m(&b, &c));
            (nums(&[&a, &b, &c]), vec![ctx.check("(ab)c = a(bc), folded", cv(&l), cv(&r))])
        }
        Law::Distributive => {
            let (a, b, c) = (s.cartesian(n), s.cartesian(n), s.cartesian(n));
            let m = |x: &Cartesian, y: &Cartesian| algebra::mul(x, y, o).expect(INFALLIBLE);
            let l = m(&a, &algebra::add(&b, &c).expect(INFALLIBLE));
            let r = algebra::add(&m(&a, &b), &m(&a, &c)).expect(INFALLIBLE);
            (nums(&[&a, &b, &c]), vec![ctx.check("a(b+c) = ab+ac", cv(&l), cv(&r))])
        }
        Law::ConjModulus => {
            let (a, b) = (s.cartesian(n), s.cartesian(n));
            let ea = ctx.exp(&a);
            let prod = ea.mul(&ctx.exp(&conjugate(&a))).expect(INFALLIBLE);
            let ab = algebra::mul(&a, &b, o).expect(INFALLIBLE);
            let mut modulus_tol = *ctx.tol;
            modulus_tol.rel_eps = MODULUS_REL;
            (
                nums(&[&a, &b]),
                vec![
                    ctx.check("s conj(s) = |s|^2", cv(&prod.to_cartesian()), real(n, modulus(&a).powi(2))),
                    Check {
                        label: "|st| = |s||t|",
                        lhs: vec![modulus(&ab)],
                        rhs: vec![modulus(&a) * modulus(&b)],
                        tol: modulus_tol,
                    },
                ],
            )
        }
        Law::N2ClassicEquiv => {
            let (a, b) = (s.cartesian(2), s.cartesian(2));
            let (p, k) = (s.int(-4, 8), s.int(1, 6));
            par = params(&[("n", i64::from(p)), ("k", i64::from(k))]);
            let (za, zb) = (Complex64::new(a.coeffs()[0], a.coeffs()[1]), Complex64::new(b.coeffs()[0], b.coeffs()[1]));
            let mut checks = vec![
                ctx.check("mul", cv(&algebra::mul(&a, &b, o).expect(INFALLIBLE)), cz(za * zb)),
                ctx.check("div", cv(&algebra::div(&a, &b, o).expect(INFALLIBLE)), cz(za / zb)),
                ctx.check("pow", cv(&algebra::pow_int(&a, p, o).expect(INFALLIBLE)), cz(za.powi(p))),
            ];
            let (r, th) = za.to_polar();
            let th = if th < 0.0 { th + TAU } else { th };
            let kf = f64::from(k);
            for (m, root) in algebra::nth_roots(&a, k as u32, o).expect(INFALLIBLE).cartesian().iter().enumerate() {
                let z = Complex64::from_polar(r.powf(kf.recip()), (th + TAU * m as f64) / kf);
                checks.push(ctx.check("root", cv(root), cz(z)));
            }
            (nums(&[&a, &b]), checks)
        }
        Law::RootsCorrect | Law::RootsValue => {
            let a = s.cartesian(n);
            let k = s.int(1, 6);
            par = params(&[("n", i64::from(k))]);
            let set = algebra::nth_roots(&a, k as u32, o).expect(INFALLIBLE);
            let mut checks: Vec<Check> = set
                .roots()
                .iter()
                .map(|r| {
                    let back = if law == Law::RootsCorrect {
                        r.pow(k).expect(INFALLIBLE).to_cartesian()
                    } else {
                        algebra::pow_int(&r.to_cartesian(), k, o).expect(INFALLIBLE)
                    };
                    ctx.check("root^n = s", cv(&back), cv(&a))
                })
                .collect();
            if law == Law::RootsCorrect {
                let roots = set.cartesian();
                let distinct = distinct_count(&roots, ctx.tol);
                checks.push(ctx.check("n distinct roots", vec![distinct as f64], vec![f64::from(k)]));
            }
            (nums(&[&a]), checks)
        }
        Law::Demoivre | Law::DemoivreValue => {
            let a = s.cartesian(n);
            let k = s.int(0, 8);
            par = params(&[("n", i64::from(k))]);
            let (pow, fold) = if law == Law::Demoivre {
                let e = ctx.exp(&a);
                let mut acc = ctx.exp(&Cartesian::one(n).expect(INFALLIBLE));
                for _ in 0..k {
                    acc = acc.mul(&e).expect(INFALLIBLE);
                }
                (e.pow(k).expect(INFALLIBLE).to_cartesian(), acc.to_cartesian())
            } else {
                let mut acc = Cartesian::one(n).expect(INFALLIBLE);
                for _ in 0..k {
                    acc = algebra::mul(&acc, &a, o).expect(INFALLIBLE);
                }
                (algebra::pow_int(&a, k, o).expect(INFALLIBLE), acc)
            };
            (nums(&[&a]), vec![ctx.check("s^n = s*...*s", cv(&pow), cv(&fold))])
        }
        Law::CartesianMulAgreement
        | Law::CartesianDivAgreement
        | Law::CartesianMulCoordinateAgreement
        | Law::CartesianDivCoordinateAgreement => {
            let (a, b) = (s.cartesian(n), s.cartesian(n));
            let (formula, normative) = match law {
                Law::CartesianMulAgreement => (pf::mul_coeffs_general(&a, &b, o), algebra::mul(&a, &b, o)),
                Law::CartesianMulCoordinateAgreement => {
                    (pf::mul_coeffs_coordinate(&a, &b, o), algebra::mul(&a, &b, o))
                }
                Law::CartesianDivAgreement => (pf::div_coeffs_general(&a, &b, o), algebra::div(&a, &b, o)),
                _ => (pf::div_coeffs_coordinate(&a, &b, o), algebra::div(&a, &b, o)),
            };
            let formula = formula.expect(INFALLIBLE).assembled();
            (
                nums(&[&a, &b]),
                vec![ctx.check("formula = exponent form", cv(&formula), cv(&normative.expect(INFALLIBLE)))],
            )
        }
        Law::Space3MulAgreement | Law::Space3DivAgreement => {
            let (a, b) = (s.space3(), s.space3());
            let (formula, normative) = if law == Law::Space3MulAgreement {
                (space3::mul3_paper_coeffs(&a, &b), space3::mul3(&a, &b))
            } else {
                (
                    space3::div3_paper_coeffs(&a, &b).expect(INFALLIBLE),
                    space3::div3(&a, &b).expect(INFALLIBLE),
                )
            };
            (
                vec![Number::from(a), Number::from(b)],
                vec![ctx.check("formula = exponent form", sv(&formula.value), sv(&normative))],
            )
        }
        Law::Space3ConjModulus => {
            let (a, b) = (s.space3(), s.space3());
            let e = ExpForm3::from_cartesian(&a);
            let prod = e.mul(&e.conj()).to_cartesian();
            let mut modulus_tol = *ctx.tol;
            modulus_tol.rel_eps = MODULUS_REL;
            (
                vec![Number::from(a), Number::from(b)],
                vec![
                    ctx.check("s conj(s) = |s|^2", sv(&prod), real(3, a.modulus().powi(2))),
                    Check {
                        label: "|st| = |s||t|",
                        lhs: vec![space3::mul3(&a, &b).modulus()],
                        rhs: vec![a.modulus() * b.modulus()],
                        tol: modulus_tol,
                    },
                ],
            )
        }
        Law::Space3ConjValue => {
            let a = s.space3();
            let prod = space3::mul3(&a, &space3::conj3(&a));
            (
                vec![Number::from(a)],
                vec![ctx.check("s conj(s) = |s|^2, folded", sv(&prod), real(3, a.modulus().powi(2)))],
            )
        }
    };
    Outcome {
        operands,
        params: par,
        checks,
    }
}

fn distinct_count(roots: &[Cartesian], tol: &Tolerance<f64>) -> usize {
    let mut reps: Vec<&Cartesian> = Vec::new();
    for r in roots {
        let dup = reps.iter().any(|q| {
            hyperspace::convert::approx_eq(q, r, tol).unwrap_or(false)
        });
        if !dup {
            reps.push(r);
        }
    }
    reps.len()
}
