//! JSON encoding of numbers, tagged by `kind`.
//!
//! ```json
//! {"kind":"cartesian","coeffs":[1.0,2.0]}
//! {"kind":"polar","modulus":1.0,"angles":[0.5],"orientation":"ccw"}
//! {"kind":"space3","a":1.0,"b":0.0,"c":2.0}
//! {"kind":"space3polar","modulus":1.0,"theta":0.5,"phi":0.1}
//! ```
//!
//! Decoding validates. Polar input is canonicalized, which leaves already
//! canonical angles bit-identical, so every value this crate produces
//! round-trips exactly.

use serde::{Deserialize, Serialize};

use crate::error::HyperError;
use crate::number::{CartesianHC, Orientation, PolarHC};
use crate::space3::{Space3, Space3Polar};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Raw", into = "Raw")]
pub enum Number {
    Cartesian(CartesianHC<f64>),
    Polar(PolarHC<f64>),
    Space3(Space3<f64>),
    Space3Polar(Space3Polar<f64>),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum Raw {
    Cartesian {
        coeffs: Vec<f64>,
    },
    Polar {
        modulus: f64,
        angles: Vec<f64>,
        orientation: Orientation,
    },
    Space3 {
        a: f64,
        b: f64,
        c: f64,
    },
    Space3Polar {
        modulus: f64,
        theta: f64,
        phi: f64,
    },
}

impl TryFrom<Raw> for Number {
    type Error = HyperError;

    fn try_from(raw: Raw) -> Result<Self, Self::Error> {
        Ok(match raw {
            Raw::Cartesian { coeffs } => Number::Cartesian(CartesianHC::new(coeffs)?),
            Raw::Polar {
                modulus,
                angles,
                orientation,
            } => Number::Polar(PolarHC::new(modulus, angles, orientation)?),
            Raw::Space3 { a, b, c } => Number::Space3(Space3::new(a, b, c)?),
            Raw::Space3Polar {
                modulus,
                theta,
                phi,
            } => Number::Space3Polar(Space3Polar::new(modulus, theta, phi)?),
        })
    }
}

impl From<Number> for Raw {
    fn from(n: Number) -> Self {
        match n {
            Number::Cartesian(c) => Raw::Cartesian { coeffs: c.into_vec() },
            Number::Polar(p) => Raw::Polar {
                modulus: p.modulus(),
                angles: p.angles().to_vec(),
                orientation: p.orientation(),
            },
            Number::Space3(s) => Raw::Space3 { a: s.a, b: s.b, c: s.c },
            Number::Space3Polar(p) => Raw::Space3Polar {
                modulus: p.modulus(),
                theta: p.theta(),
                phi: p.phi(),
            },
        }
    }
}

impl From<CartesianHC<f64>> for Number {
    fn from(c: CartesianHC<f64>) -> Self {
        Number::Cartesian(c)
    }
}

impl From<PolarHC<f64>> for Number {
    fn from(p: PolarHC<f64>) -> Self {
        Number::Polar(p)
    }
}

impl From<Space3<f64>> for Number {
    fn from(s: Space3<f64>) -> Self {
        Number::Space3(s)
    }
}

impl From<Space3Polar<f64>> for Number {
    fn from(p: Space3Polar<f64>) -> Self {
        Number::Space3Polar(p)
    }
}
