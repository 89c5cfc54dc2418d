//! Expression tree and its printer.
//!
//! The printer emits a form the parser reads back to an equal tree: binary
//! operations are fully parenthesized, negation and conjugation print as calls,
//! and literal components use the shortest representation that round-trips.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    pub fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// `c[a0, a1, …]`
    Cart(Vec<f64>),
    /// `p[r; θ1, …]`
    Polar(f64, Vec<f64>),
    /// `s3[a, b, c]`
    S3([f64; 3]),
    /// `s3p[r; θ, φ]`
    S3Polar(f64, f64, f64),
    Num(f64),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Conj(Box<Expr>),
    Pow(Box<Expr>, i32),
    Abs(Box<Expr>),
    Arg(Box<Expr>, usize),
    Roots(Box<Expr>, u32),
    Lift(Box<Expr>, Box<Expr>),
}

/// What an expression evaluates to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Hyper(usize),
    Space3,
    Scalar,
    Roots(Box<Family>),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Hyper(d) => write!(f, "{d}-dimensional hyperspace number"),
            Family::Space3 => f.write_str("3D space number"),
            Family::Scalar => f.write_str("real scalar"),
            Family::Roots(inner) => write!(f, "root set of {inner}s"),
        }
    }
}

struct Real(f64);

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

fn list(f: &mut fmt::Formatter<'_>, xs: &[f64]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{}", Real(*x))?;
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Cart(v) => {
                f.write_str("c[")?;
                list(f, v)?;
                f.write_str("]")
            }
            Expr::Polar(r, a) => {
                write!(f, "p[{}; ", Real(*r))?;
                list(f, a)?;
                f.write_str("]")
            }
            Expr::S3(v) => {
                f.write_str("s3[")?;
                list(f, v)?;
                f.write_str("]")
            }
            Expr::S3Polar(r, t, p) => write!(f, "s3p[{}; {}, {}]", Real(*r), Real(*t), Real(*p)),
            Expr::Num(x) if x.is_sign_negative() => write!(f, "({})", Real(*x)),
            Expr::Num(x) => write!(f, "{}", Real(*x)),
            Expr::Bin(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Expr::Neg(e) => write!(f, "neg({e})"),
            Expr::Conj(e) => write!(f, "conj({e})"),
            Expr::Pow(e, n) => write!(f, "{e}^{n}"),
            Expr::Abs(e) => write!(f, "abs({e})"),
            Expr::Arg(e, k) => write!(f, "arg({e}, {k})"),
            Expr::Roots(e, n) => write!(f, "roots({e}, {n})"),
            Expr::Lift(e, a) => write!(f, "lift({e}, {a})"),
        }
    }
}
