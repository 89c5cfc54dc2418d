//! Evaluation of checked expression trees.
//!
//! Values stay in the form their last operation produced. Literals, sums and
//! lifts are Cartesian; products, quotients, powers and roots work on raw
//! exponent-form angle chains, so chains compose without refolding. Either
//! form converts to the other on demand. Every literal is read in the
//! session orientation.

use hyperspace::{Cartesian, Exp, ExpForm3, HyperError, Orientation, Polar, S3Exp, S3Polar, S3};

use crate::ast::{BinOp, Expr};

#[derive(Debug, Clone, PartialEq)]
pub enum Hyper {
    Cart(Cartesian),
    Exp(Exp),
}

impl Hyper {
    pub fn to_cartesian(&self) -> Cartesian {
        match self {
            Hyper::Cart(c) => c.clone(),
            Hyper::Exp(e) => e.to_cartesian(),
        }
    }

    /// Canonical polar form.
    pub fn to_polar(&self, o: Orientation) -> Polar {
        match self {
            Hyper::Cart(c) => hyperspace::convert::to_polar(c, o),
            Hyper::Exp(e) => e.to_polar(),
        }
    }

    fn exp(&self, o: Orientation) -> Exp {
        match self {
            Hyper::Cart(c) => Exp::from_cartesian(c, o),
            Hyper::Exp(e) => e.clone(),
        }
    }

    fn modulus(&self) -> f64 {
        match self {
            Hyper::Cart(c) => c.modulus(),
            Hyper::Exp(e) => e.modulus(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Space {
    Cart(S3),
    Exp(S3Exp),
}

impl Space {
    pub fn to_cartesian(&self) -> S3 {
        match self {
            Space::Cart(c) => *c,
            Space::Exp(e) => e.to_cartesian(),
        }
    }

    pub fn to_polar(&self) -> S3Polar {
        match self {
            Space::Cart(c) => hyperspace::space3::to_polar3(c),
            Space::Exp(e) => e.to_polar(),
        }
    }

    fn exp(&self) -> S3Exp {
        match self {
            Space::Cart(c) => ExpForm3::from_cartesian(c),
            Space::Exp(e) => *e,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Hyper(Hyper),
    Space3(Space),
    Scalar(f64),
    Roots(Vec<Value>),
}

const TYPED: &str = "rejected by the type check";

pub fn eval(e: &Expr, o: Orientation) -> Result<Value, HyperError> {
    Ok(match e {
        Expr::Cart(v) => Value::Hyper(Hyper::Cart(Cartesian::new(v.clone())?)),
        Expr::Polar(r, a) => Value::Hyper(Hyper::Exp(Exp::new(*r, a.clone(), o)?)),
        Expr::S3([a, b, c]) => Value::Space3(Space::Cart(S3::new(*a, *b, *c)?)),
        Expr::S3Polar(r, t, p) => Value::Space3(Space::Exp(ExpForm3::new(*r, *t, *p)?)),
        Expr::Num(x) => Value::Scalar(*x),
        Expr::Bin(op, l, r) => binary(*op, eval(l, o)?, eval(r, o)?, o)?,
        Expr::Neg(x) => match eval(x, o)? {
            Value::Hyper(h) => Value::Hyper(Hyper::Cart(hyperspace::algebra::negate(&h.to_cartesian()))),
            Value::Space3(s) => Value::Space3(Space::Cart(s.to_cartesian().neg())),
            Value::Scalar(x) => Value::Scalar(-x),
            Value::Roots(_) => unreachable!("{TYPED}"),
        },
        Expr::Conj(x) => match eval(x, o)? {
            Value::Hyper(h) => Value::Hyper(Hyper::Exp(h.exp(o).conj())),
            Value::Space3(s) => Value::Space3(Space::Exp(s.exp().conj())),
            _ => unreachable!("{TYPED}"),
        },
        Expr::Pow(x, n) => match eval(x, o)? {
            Value::Hyper(h) => Value::Hyper(Hyper::Exp(h.exp(o).pow(*n)?)),
            Value::Space3(s) => Value::Space3(Space::Exp(s.exp().pow(*n)?)),
            Value::Scalar(x) => {
                if x == 0.0 && *n < 0 {
                    return Err(HyperError::DivisionByZero);
                }
                finite(x.powi(*n))?
            }
            Value::Roots(_) => unreachable!("{TYPED}"),
        },
        Expr::Abs(x) => Value::Scalar(match eval(x, o)? {
            Value::Hyper(h) => h.modulus(),
            Value::Space3(s) => s.to_cartesian().modulus(),
            Value::Scalar(x) => x.abs(),
            Value::Roots(_) => unreachable!("{TYPED}"),
        }),
        Expr::Arg(x, k) => Value::Scalar(match eval(x, o)? {
            Value::Hyper(h) => h.to_polar(o).angles()[k - 1],
            Value::Space3(s) => {
                let p = s.to_polar();
                if *k == 1 {
                    p.theta()
                } else {
                    p.phi()
                }
            }
            _ => unreachable!("{TYPED}"),
        }),
        Expr::Roots(x, n) => match eval(x, o)? {
            Value::Hyper(h) => Value::Roots(
                h.exp(o)
                    .nth_roots(*n)?
                    .roots()
                    .iter()
                    .map(|r| Value::Hyper(Hyper::Exp(r.clone())))
                    .collect(),
            ),
            Value::Space3(s) => Value::Roots(
                s.exp()
                    .nth_roots(*n)?
                    .into_iter()
                    .map(|r| Value::Space3(Space::Exp(r)))
                    .collect(),
            ),
            _ => unreachable!("{TYPED}"),
        },
        Expr::Lift(x, a) => {
            let (Value::Hyper(h), Value::Scalar(a)) = (eval(x, o)?, eval(a, o)?) else {
                unreachable!("{TYPED}")
            };
            Value::Hyper(Hyper::Cart(hyperspace::duality::lift(&h.to_cartesian(), a)?))
        }
    })
}

fn finite(x: f64) -> Result<Value, HyperError> {
    if x.is_finite() {
        Ok(Value::Scalar(x))
    } else {
        Err(HyperError::NonFinite("scalar result"))
    }
}

fn binary(op: BinOp, l: Value, r: Value, o: Orientation) -> Result<Value, HyperError> {
    use hyperspace::algebra;
    Ok(match (l, r) {
        (Value::Hyper(a), Value::Hyper(b)) => Value::Hyper(match op {
            BinOp::Add => Hyper::Cart(algebra::add(&a.to_cartesian(), &b.to_cartesian())?),
            BinOp::Sub => Hyper::Cart(algebra::sub(&a.to_cartesian(), &b.to_cartesian())?),
            BinOp::Mul => Hyper::Exp(a.exp(o).mul(&b.exp(o))?),
            BinOp::Div => Hyper::Exp(a.exp(o).div(&b.exp(o))?),
        }),
        (Value::Space3(a), Value::Space3(b)) => Value::Space3(match op {
            BinOp::Add => Space::Cart(a.to_cartesian().add(&b.to_cartesian())),
            BinOp::Sub => Space::Cart(a.to_cartesian().add(&b.to_cartesian().neg())),
            BinOp::Mul => Space::Exp(a.exp().mul(&b.exp())),
            BinOp::Div => Space::Exp(a.exp().div(&b.exp())?),
        }),
        (Value::Scalar(a), Value::Scalar(b)) => finite(match op {
            BinOp::Add => a + b,
            BinOp::Sub => a - b,
            BinOp::Mul => a * b,
            BinOp::Div if b == 0.0 => return Err(HyperError::DivisionByZero),
            BinOp::Div => a / b,
        })?,
        _ => unreachable!("{TYPED}"),
    })
}
