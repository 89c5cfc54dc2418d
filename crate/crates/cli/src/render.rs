//! Output formatting for evaluated values.
//!
//! Text output is itself valid input: `c[0,2]`, `p[2;1.5707963268]`,
//! `s3[1,0,0]`, `s3p[1;0.5,0]`, a bare real for scalars, and one value per
//! line for root sets.

use hyperspace::json::Number;
use hyperspace::{Orientation, Tol, S3};
use serde_json::{json, Value as Json};

use crate::eval::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Repr {
    Cartesian,
    Polar,
}

#[derive(Debug, Clone, Copy)]
pub struct Style {
    pub digits: usize,
    pub tol: Tol,
    pub repr: Repr,
    pub orientation: Orientation,
}

/// Rounds to `digits` significant digits and normalizes `-0`.
pub fn round(x: f64, digits: usize) -> f64 {
    let digits = digits.clamp(1, 17);
    let r: f64 = format!("{:.*e}", digits - 1, x).parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Shortest text for a rounded real, without a trailing `.0`.
pub fn real(x: f64, digits: usize) -> String {
    let s = format!("{:?}", round(x, digits));
    match s.strip_suffix(".0") {
        Some(t) => t.to_string(),
        None => s,
    }
}

fn snap(v: &[f64], tol: &Tol) -> Vec<f64> {
    let scale = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let t = tol.threshold(scale);
    v.iter().map(|&x| if x.abs() <= t { 0.0 } else { x }).collect()
}

fn joined(v: &[f64], digits: usize) -> String {
    v.iter().map(|&x| real(x, digits)).collect::<Vec<_>>().join(",")
}

fn number(v: &Value, style: &Style) -> Number {
    match (v, style.repr) {
        (Value::Hyper(h), Repr::Cartesian) => {
            let c = h.to_cartesian();
            Number::Cartesian(hyperspace::Cartesian::new(snap(c.coeffs(), &style.tol)).expect("finite"))
        }
        (Value::Hyper(h), Repr::Polar) => Number::Polar(h.to_polar(style.orientation)),
        (Value::Space3(s), Repr::Cartesian) => {
            let v = snap(&s.to_cartesian().coeffs(), &style.tol);
            Number::Space3(S3::new(v[0], v[1], v[2]).expect("finite"))
        }
        (Value::Space3(s), Repr::Polar) => Number::Space3Polar(s.to_polar()),
        _ => unreachable!("scalars and root sets are not numbers"),
    }
}

pub fn text(v: &Value, style: &Style) -> String {
    let d = style.digits;
    match v {
        Value::Scalar(x) => real(*x, d),
        Value::Roots(rs) => rs.iter().map(|r| text(r, style)).collect::<Vec<_>>().join("\n"),
        _ => match number(v, style) {
            Number::Cartesian(c) => format!("c[{}]", joined(c.coeffs(), d)),
            Number::Polar(p) => format!("p[{};{}]", real(p.modulus(), d), joined(p.angles(), d)),
            Number::Space3(s) => format!("s3[{}]", joined(&s.coeffs(), d)),
            Number::Space3Polar(p) => format!("s3p[{};{},{}]", real(p.modulus(), d), real(p.theta(), d), real(p.phi(), d)),
        },
    }
}

fn round_json(j: &mut Json, digits: usize) {
    match j {
        Json::Number(n) if n.is_f64() => {
            let x = round(n.as_f64().expect("f64"), digits);
            *j = json!(x);
        }
        Json::Array(xs) => xs.iter_mut().for_each(|x| round_json(x, digits)),
        Json::Object(m) => m.values_mut().for_each(|x| round_json(x, digits)),
        _ => {}
    }
}

pub fn json_value(v: &Value, style: &Style) -> Json {
    let mut j = match v {
        Value::Scalar(x) => json!({"kind": "scalar", "value": x}),
        Value::Roots(rs) => json!({
            "kind": "roots",
            "roots": rs.iter().map(|r| json_value(r, style)).collect::<Vec<_>>(),
        }),
        _ => serde_json::to_value(number(v, style)).expect("numbers serialize"),
    };
    round_json(&mut j, style.digits);
    j
}
