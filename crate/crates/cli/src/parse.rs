//! Recursive-descent parser with a type check folded in.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' int)*
//! primary := number | 'pi' | literal | call | '(' expr ')'
//! literal := 'c[' const (',' const)+ ']' | 'p[' const ';' const (',' const)* ']'
//!          | 's3[' const ',' const ',' const ']' | 's3p[' const ';' const ',' const ']'
//! call    := ('conj' | 'neg' | 'abs') '(' expr ')' | 'arg(' expr ',' uint ')'
//!          | 'roots(' expr ',' uint ')' | 'lift(' expr ',' expr ')'
//! const   := numbers, `pi`, `+ - * /` and parentheses, folded while parsing
//! ```
//!
//! Offsets are byte positions into the input.

use std::fmt;

use crate::ast::{BinOp, Expr, Family};

#[derive(Debug, Clone, PartialEq)]
pub enum ParseErrorKind {
    Syntax { expected: Vec<String>, found: String },
    Type(String),
    Value(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => write!(
                f,
                "syntax error at byte {}: expected {}, found {found}",
                self.offset,
                expected.join(" or ")
            ),
            ParseErrorKind::Type(m) => write!(f, "type error at byte {}: {m}", self.offset),
            ParseErrorKind::Value(m) => write!(f, "invalid value at byte {}: {m}", self.offset),
        }
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

/// Parses and type-checks `text`, returning the tree and its family.
pub fn parse(text: &str) -> PResult<(Expr, Family)> {
    let mut p = Parser { src: text, pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.syntax(&["operator", "end of input"]));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn found(&self) -> String {
        match self.rest().chars().next() {
            None => "end of input".into(),
            Some(c) => format!("`{c}`"),
        }
    }

    fn syntax(&self, expected: &[&str]) -> ParseError {
        ParseError {
            offset: self.pos,
            kind: ParseErrorKind::Syntax {
                expected: expected.iter().map(|s| s.to_string()).collect(),
                found: self.found(),
            },
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(&[&format!("`{c}`")]))
        }
    }

    fn ident(&mut self) -> Option<(usize, &str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_alphabetic() || (i > 0 && c.is_ascii_digit())))
            .map_or(self.rest().len(), |(i, _)| i);
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &self.src[start..start + len]))
    }

    fn number(&mut self) -> PResult<f64> {
        self.skip_ws();
        let start = self.pos;
        let b = self.src.as_bytes();
        let mut i = self.pos;
        let digits = |i: &mut usize| {
            let s = *i;
            while *i < b.len() && b[*i].is_ascii_digit() {
                *i += 1;
            }
            *i > s
        };
        let int = digits(&mut i);
        let mut frac = false;
        if i < b.len() && b[i] == b'.' {
            i += 1;
            frac = digits(&mut i);
        }
        if !int && !frac {
            return Err(self.syntax(&["number"]));
        }
        if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
            let mut j = i + 1;
            if j < b.len() && (b[j] == b'+' || b[j] == b'-') {
                j += 1;
            }
            if digits(&mut j) {
                i = j;
            }
        }
        self.pos = i;
        self.src[start..i].parse().map_err(|_| ParseError {
            offset: start,
            kind: ParseErrorKind::Value("malformed number".into()),
        })
    }

    fn uint(&mut self) -> PResult<(usize, u64)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.syntax(&["integer"]));
        }
        self.pos += len;
        let v = self.src[start..self.pos].parse().map_err(|_| ParseError {
            offset: start,
            kind: ParseErrorKind::Value("integer out of range".into()),
        })?;
        Ok((start, v))
    }

    fn type_err(offset: usize, msg: String) -> ParseError {
        ParseError {
            offset,
            kind: ParseErrorKind::Type(msg),
        }
    }

    fn expr(&mut self) -> PResult<(Expr, Family)> {
        let (mut lhs, mut fam) = self.term()?;
        loop {
            let op = match self.peek() {
                Some('+') => BinOp::Add,
                Some('-') => BinOp::Sub,
                _ => return Ok((lhs, fam)),
            };
            let at = self.pos;
            self.pos += 1;
            let (rhs, rf) = self.term()?;
            fam = binary_family(at, op, fam, rf)?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> PResult<(Expr, Family)> {
        let (mut lhs, mut fam) = self.unary()?;
        loop {
            let op = match self.peek() {
                Some('*') => BinOp::Mul,
                Some('/') => BinOp::Div,
                _ => return Ok((lhs, fam)),
            };
            let at = self.pos;
            self.pos += 1;
            let (rhs, rf) = self.unary()?;
            fam = binary_family(at, op, fam, rf)?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> PResult<(Expr, Family)> {
        let at = self.pos;
        if self.eat('-') {
            let (e, fam) = self.unary()?;
            return match (e, fam) {
                (Expr::Num(x), fam) => Ok((Expr::Num(-x), fam)),
                (_, Family::Roots(_)) => Err(Self::type_err(at, "cannot negate a root set".into())),
                (e, fam) => Ok((Expr::Neg(Box::new(e)), fam)),
            };
        }
        self.power()
    }

    fn power(&mut self) -> PResult<(Expr, Family)> {
        let (mut base, fam) = self.primary()?;
        while self.peek() == Some('^') {
            let at = self.pos;
            self.pos += 1;
            let neg = self.eat('-');
            if !neg {
                self.eat('+');
            }
            let (off, n) = self.uint()?;
            let n = i64::try_from(n).ok().map(|n| if neg { -n } else { n });
            let n = n.and_then(|n| i32::try_from(n).ok()).ok_or(ParseError {
                offset: off,
                kind: ParseErrorKind::Value("exponent out of range".into()),
            })?;
            if matches!(fam, Family::Roots(_)) {
                return Err(Self::type_err(at, "cannot raise a root set to a power".into()));
            }
            base = Expr::Pow(Box::new(base), n);
        }
        Ok((base, fam))
    }

    fn primary(&mut self) -> PResult<(Expr, Family)> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let out = self.expr()?;
                self.expect(')')?;
                Ok(out)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                let at = self.pos;
                let x = self.number()?;
                if !x.is_finite() {
                    return Err(ParseError {
                        offset: at,
                        kind: ParseErrorKind::Value("number is not finite".into()),
                    });
                }
                Ok((Expr::Num(x), Family::Scalar))
            }
            Some(c) if c.is_ascii_alphabetic() => self.named(),
            _ => Err(self.syntax(&["number", "literal", "function", "`(`"])),
        }
    }

    fn named(&mut self) -> PResult<(Expr, Family)> {
        let save = self.pos;
        let (at, name) = self.ident().expect("caller saw a letter");
        let name = name.to_string();
        match name.as_str() {
            "pi" => Ok((Expr::Num(std::f64::consts::PI), Family::Scalar)),
            "c" | "p" | "s3" | "s3p" => self.literal(at, &name),
            "conj" | "neg" | "abs" | "arg" | "roots" | "lift" => self.call(&name),
            _ => {
                self.pos = save;
                self.skip_ws();
                Err(ParseError {
                    offset: at,
                    kind: ParseErrorKind::Syntax {
                        expected: vec!["literal".into(), "function".into(), "`pi`".into()],
                        found: format!("`{name}`"),
                    },
                })
            }
        }
    }

    fn const_list(&mut self, close: char) -> PResult<Vec<f64>> {
        let mut v = vec![self.const_expr()?];
        while self.eat(',') {
            v.push(self.const_expr()?);
        }
        if !self.eat(close) {
            return Err(self.syntax(&["`,`", &format!("`{close}`")]));
        }
        Ok(v)
    }

    fn literal(&mut self, at: usize, kind: &str) -> PResult<(Expr, Family)> {
        self.expect('[')?;
        let value_err = |m: &str| ParseError {
            offset: at,
            kind: ParseErrorKind::Value(m.into()),
        };
        match kind {
            "c" => {
                let v = self.const_list(']')?;
                if v.len() < 2 {
                    return Err(value_err("a Cartesian literal needs at least two coefficients"));
                }
                let d = v.len();
                Ok((Expr::Cart(v), Family::Hyper(d)))
            }
            "p" => {
                let r = self.const_expr()?;
                self.expect(';')?;
                let a = self.const_list(']')?;
                if r < 0.0 {
                    return Err(value_err("modulus must be non-negative"));
                }
                let d = a.len() + 1;
                Ok((Expr::Polar(r, a), Family::Hyper(d)))
            }
            "s3" => {
                let v = self.const_list(']')?;
                if v.len() != 3 {
                    return Err(value_err("a 3D literal needs exactly three coefficients"));
                }
                Ok((Expr::S3([v[0], v[1], v[2]]), Family::Space3))
            }
            _ => {
                let r = self.const_expr()?;
                self.expect(';')?;
                let a = self.const_list(']')?;
                if a.len() != 2 {
                    return Err(value_err("a 3D polar literal needs exactly two angles"));
                }
                if r < 0.0 {
                    return Err(value_err("modulus must be non-negative"));
                }
                Ok((Expr::S3Polar(r, a[0], a[1]), Family::Space3))
            }
        }
    }

    fn call(&mut self, name: &str) -> PResult<(Expr, Family)> {
        self.expect('(')?;
        let arg_at = {
            self.skip_ws();
            self.pos
        };
        let (e, fam) = self.expr()?;
        let out = match name {
            "conj" => match fam {
                Family::Hyper(_) | Family::Space3 => (Expr::Conj(Box::new(e)), fam),
                other => return Err(Self::type_err(arg_at, format!("conj expects a number, got a {other}"))),
            },
            "neg" => match fam {
                Family::Roots(_) => return Err(Self::type_err(arg_at, "cannot negate a root set".into())),
                fam => (Expr::Neg(Box::new(e)), fam),
            },
            "abs" => match fam {
                Family::Roots(_) => return Err(Self::type_err(arg_at, "abs expects a number".into())),
                _ => (Expr::Abs(Box::new(e)), Family::Scalar),
            },
            "arg" => {
                self.expect(',')?;
                let (k_at, k) = self.uint()?;
                let max = match fam {
                    Family::Hyper(d) => d - 1,
                    Family::Space3 => 2,
                    other => return Err(Self::type_err(arg_at, format!("arg expects a number, got a {other}"))),
                };
                if k == 0 || k as usize > max {
                    return Err(Self::type_err(k_at, format!("argument index must be in 1..={max}")));
                }
                (Expr::Arg(Box::new(e), k as usize), Family::Scalar)
            }
            "roots" => {
                self.expect(',')?;
                let (n_at, n) = self.uint()?;
                let n = u32::try_from(n).ok().filter(|&n| n >= 1).ok_or(ParseError {
                    offset: n_at,
                    kind: ParseErrorKind::Value("root index must be between 1 and 2^32-1".into()),
                })?;
                match fam {
                    Family::Hyper(_) | Family::Space3 => (Expr::Roots(Box::new(e), n), Family::Roots(Box::new(fam))),
                    other => return Err(Self::type_err(arg_at, format!("roots expects a number, got a {other}"))),
                }
            }
            _ => {
                self.expect(',')?;
                self.skip_ws();
                let a_at = self.pos;
                let (a, af) = self.expr()?;
                if af != Family::Scalar {
                    return Err(Self::type_err(a_at, format!("lift coefficient must be a real scalar, got a {af}")));
                }
                match fam {
                    Family::Hyper(d) => (Expr::Lift(Box::new(e), Box::new(a)), Family::Hyper(d + 1)),
                    other => {
                        return Err(Self::type_err(
                            arg_at,
                            format!("lift expects a hyperspace number, got a {other}"),
                        ))
                    }
                }
            }
        };
        self.expect(')')?;
        Ok(out)
    }

    // constant arithmetic inside literals

    fn const_expr(&mut self) -> PResult<f64> {
        self.skip_ws();
        let start = self.pos;
        let mut v = self.const_term()?;
        loop {
            if self.eat('+') {
                v += self.const_term()?;
            } else if self.eat('-') {
                v -= self.const_term()?;
            } else {
                break;
            }
        }
        if !v.is_finite() {
            return Err(ParseError {
                offset: start,
                kind: ParseErrorKind::Value("component is not finite".into()),
            });
        }
        Ok(v)
    }

    fn const_term(&mut self) -> PResult<f64> {
        let mut v = self.const_unary()?;
        loop {
            if self.eat('*') {
                v *= self.const_unary()?;
            } else if self.eat('/') {
                v /= self.const_unary()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn const_unary(&mut self) -> PResult<f64> {
        if self.eat('-') {
            return Ok(-self.const_unary()?);
        }
        if self.eat('+') {
            return self.const_unary();
        }
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.const_expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let save = self.pos;
                match self.ident() {
                    Some((_, "pi")) => Ok(std::f64::consts::PI),
                    _ => {
                        self.pos = save;
                        Err(self.syntax(&["number", "`pi`", "`(`"]))
                    }
                }
            }
            _ => Err(self.syntax(&["number", "`pi`", "`(`"])),
        }
    }
}

fn binary_family(at: usize, op: BinOp, l: Family, r: Family) -> PResult<Family> {
    if matches!(l, Family::Roots(_)) || matches!(r, Family::Roots(_)) {
        return Err(Parser::type_err(
            at,
            format!("`{}` cannot take a root set as an operand", op.symbol()),
        ));
    }
    if l != r {
        return Err(Parser::type_err(
            at,
            format!("`{}` mixes a {l} with a {r}", op.symbol()),
        ));
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(s: &str) -> Expr {
        parse(s).unwrap_or_else(|e| panic!("{s}: {e}")).0
    }

    fn cart(v: &[f64]) -> Box<Expr> {
        Box::new(Expr::Cart(v.to_vec()))
    }

    #[test]
    fn basic_shapes() {
        assert_eq!(ok("c[1,1] * c[1,1]"), Expr::Bin(BinOp::Mul, cart(&[1.0, 1.0]), cart(&[1.0, 1.0])));
        assert_eq!(ok("roots(c[-1,0], 2)"), Expr::Roots(cart(&[-1.0, 0.0]), 2));
        let err = parse("c[1,2] + s3[1,2,3]").unwrap_err();
        assert_eq!(err.offset, 7);
        assert!(matches!(err.kind, ParseErrorKind::Type(_)));
    }

    #[test]
    fn precedence_and_associativity() {
        let e = ok("c[1,0] + c[0,1] * c[1,1] - c[2,2]");
        let Expr::Bin(BinOp::Sub, l, _) = e else { panic!() };
        let Expr::Bin(BinOp::Add, _, m) = *l else { panic!() };
        assert!(matches!(*m, Expr::Bin(BinOp::Mul, _, _)));
        // ^ binds tighter than unary minus
        assert_eq!(ok("-c[1,1]^2"), Expr::Neg(Box::new(Expr::Pow(cart(&[1.0, 1.0]), 2))));
        assert_eq!(ok("c[1,1]^2^-1"), Expr::Pow(Box::new(Expr::Pow(cart(&[1.0, 1.0]), 2)), -1));
        assert_eq!(ok("c[1,0] / c[1,1] / c[0,1]"), ok("(c[1,0] / c[1,1]) / c[0,1]"));
    }

    #[test]
    fn literal_constants_fold() {
        assert_eq!(ok("p[2; pi/4, -pi/2]"), Expr::Polar(2.0, vec![std::f64::consts::FRAC_PI_4, -std::f64::consts::FRAC_PI_2]));
        assert_eq!(ok("c[1e-3, (1+2)*3]"), Expr::Cart(vec![1e-3, 9.0]));
        assert_eq!(ok("s3p[1; pi/2, 0]"), Expr::S3Polar(1.0, std::f64::consts::FRAC_PI_2, 0.0));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let e = parse("c[1, 2").unwrap_err();
        assert_eq!(e.offset, 6);
        let e = parse("c[1,1] *").unwrap_err();
        assert_eq!(e.offset, 8);
        let e = parse("c[1,1] $ c[1,1]").unwrap_err();
        assert_eq!(e.offset, 7);
        let e = parse("foo(c[1,1])").unwrap_err();
        assert_eq!(e.offset, 0);
        assert!(parse("c[1]").is_err());
        assert!(parse("c[1, 1/0]").is_err());
        assert!(parse("p[-1; 0]").is_err());
    }

    #[test]
    fn type_rules() {
        assert_eq!(parse("lift(c[3,4], 12)").unwrap().1, Family::Hyper(3));
        assert_eq!(parse("abs(c[3,4]) * 2").unwrap().1, Family::Scalar);
        assert!(parse("c[1,1] + c[1,1,1]").is_err());
        assert!(parse("roots(c[1,1], 2) + c[1,1]").is_err());
        assert!(parse("arg(c[1,1], 2)").is_err());
        assert!(parse("arg(s3[1,1,1], 2)").is_ok());
        assert!(parse("lift(s3[1,1,1], 1)").is_err());
        assert!(parse("lift(c[1,1], c[1,1])").is_err());
        assert!(parse("conj(2)").is_err());
        assert!(parse("roots(c[1,1], 0)").is_err());
    }
}
