//! Hyperspace complex numbers.
//!
//! An N-dimensional number `a_0 + Σ i_k a_k` is held either as its coefficient
//! vector ([`CartesianHC`]) or as a modulus with a chain of component angles
//! ([`PolarHC`]). Multiplication, division, powers and roots follow the
//! exponent form `|s| ∏ e^{i_k θ_k}`; addition is coefficientwise.
//!
//! The crate also carries the three-dimensional master/slave system
//! ([`space3`]), a geometric rotation-chain construction used as an oracle
//! ([`rotation`]), literal evaluators of the coordinate multiplication and
//! division formulas kept for auditing ([`paper_formulas`]), and the lift from
//! `n` to `n + 1` dimensions ([`duality`]).
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the unsuffixed
//! aliases below fix `f64`.

pub mod algebra;
pub mod convert;
pub mod duality;
pub mod error;
pub mod json;
pub mod number;
pub mod paper_formulas;
pub mod rotation;
pub mod scalar;
pub mod space3;
pub mod tolerance;

pub use algebra::{ExpForm, RootSet};
pub use error::{HyperError, Result};
pub use number::{CartesianHC, Orientation, PolarHC};
pub use scalar::Real;
pub use space3::{ExpForm3, SlaveDecomposition, Space3, Space3Polar};
pub use tolerance::Tolerance;

pub type Cartesian = CartesianHC<f64>;
pub type Polar = PolarHC<f64>;
pub type Exp = ExpForm<f64>;
pub type Roots = RootSet<f64>;
pub type Tol = Tolerance<f64>;
pub type S3 = Space3<f64>;
pub type S3Polar = Space3Polar<f64>;
pub type S3Exp = ExpForm3<f64>;

pub type Cartesian32 = CartesianHC<f32>;
pub type Polar32 = PolarHC<f32>;
pub type Exp32 = ExpForm<f32>;
pub type S3_32 = Space3<f32>;

/// Crate version, echoed into audit reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
