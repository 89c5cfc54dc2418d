//! Law identifiers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::AuditError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    AddCommutative,
    AddAssociative,
    MulCommutative,
    MulAssociative,
    Distributive,
    ConjModulus,
    N2ClassicEquiv,
    RootsCorrect,
    Demoivre,
    CartesianMulAgreement,
    CartesianDivAgreement,
    Space3MulAgreement,
    Space3DivAgreement,
    Space3ConjModulus,
    // not in the default suite: they measure what folding to canonical
    // coordinates after every operation costs, and the coordinate-case formulas
    MulAssociativeValue,
    DemoivreValue,
    RootsValue,
    Space3ConjValue,
    CartesianMulCoordinateAgreement,
    CartesianDivCoordinateAgreement,
}

/// Whether a law must hold or is being measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LawKind {
    Invariant,
    Hypothesis,
}

impl Law {
    /// The fourteen laws run when none are named.
    pub const DEFAULT: [Law; 14] = [
        Law::AddCommutative,
        Law::AddAssociative,
        Law::MulCommutative,
        Law::MulAssociative,
        Law::Distributive,
        Law::ConjModulus,
        Law::N2ClassicEquiv,
        Law::RootsCorrect,
        Law::Demoivre,
        Law::CartesianMulAgreement,
        Law::CartesianDivAgreement,
        Law::Space3MulAgreement,
        Law::Space3DivAgreement,
        Law::Space3ConjModulus,
    ];

    pub const EXTRA: [Law; 6] = [
        Law::MulAssociativeValue,
        Law::DemoivreValue,
        Law::RootsValue,
        Law::Space3ConjValue,
        Law::CartesianMulCoordinateAgreement,
        Law::CartesianDivCoordinateAgreement,
    ];

    pub fn all() -> impl Iterator<Item = Law> {
        Self::DEFAULT.into_iter().chain(Self::EXTRA)
    }

    pub fn id(self) -> &'static str {
        match self {
            Law::AddCommutative => "add_commutative",
            Law::AddAssociative => "add_associative",
            Law::MulCommutative => "mul_commutative",
            Law::MulAssociative => "mul_associative",
            Law::Distributive => "distributive",
            Law::ConjModulus => "conj_modulus",
            Law::N2ClassicEquiv => "n2_classic_equiv",
            Law::RootsCorrect => "roots_correct",
            Law::Demoivre => "demoivre",
            Law::CartesianMulAgreement => "cartesian_mul_agreement",
            Law::CartesianDivAgreement => "cartesian_div_agreement",
            Law::Space3MulAgreement => "space3_mul_agreement",
            Law::Space3DivAgreement => "space3_div_agreement",
            Law::Space3ConjModulus => "space3_conj_modulus",
            Law::MulAssociativeValue => "mul_associative_value",
            Law::DemoivreValue => "demoivre_value",
            Law::RootsValue => "roots_value",
            Law::Space3ConjValue => "space3_conj_value",
            Law::CartesianMulCoordinateAgreement => "cartesian_mul_coordinate_agreement",
            Law::CartesianDivCoordinateAgreement => "cartesian_div_coordinate_agreement",
        }
    }

    /// Distributivity counts as an invariant only in two dimensions, where the
    /// system is the classic complex field.
    pub fn kind(self, dim: usize) -> LawKind {
        match self {
            Law::AddCommutative
            | Law::AddAssociative
            | Law::MulCommutative
            | Law::MulAssociative
            | Law::ConjModulus
            | Law::N2ClassicEquiv
            | Law::RootsCorrect
            | Law::Demoivre
            | Law::Space3ConjModulus => LawKind::Invariant,
            Law::Distributive if dim == 2 => LawKind::Invariant,
            _ => LawKind::Hypothesis,
        }
    }

    /// Dimensions a law is defined at: the classic-equivalence law needs two,
    /// the three-dimensional system only exists at three.
    pub fn applies_to(self, dim: usize) -> bool {
        match self {
            Law::N2ClassicEquiv => dim == 2,
            Law::Space3MulAgreement
            | Law::Space3DivAgreement
            | Law::Space3ConjModulus
            | Law::Space3ConjValue => dim == 3,
            _ => dim >= 2,
        }
    }

    pub fn is_space3(self) -> bool {
        matches!(
            self,
            Law::Space3MulAgreement | Law::Space3DivAgreement | Law::Space3ConjModulus | Law::Space3ConjValue
        )
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Law {
    type Err = AuditError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Law::all()
            .find(|l| l.id() == s)
            .ok_or_else(|| AuditError::UnknownLaw(s.to_string()))
    }
}
