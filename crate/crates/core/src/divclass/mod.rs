//! Real super division algebras and their tenfold classification.
//!
//! Over the rationals no square roots are available, so odd generators are
//! never normalised to `e² = ±1`. Instead the classifier reports the sign of
//! `e²`, which is all that matters over the reals: if `e² = λ·1` with
//! `λ ≠ 0` then `e' = e/√|λ|` is a real rescaling with `e'² = sign(λ)·1`.
//! Likewise the complex witness of a two-dimensional even part carries an
//! unnormalised square `u² = -d·1` with `d > 0`.
//!
//! In the quaternionic case the odd generator is recentred by solving
//! directly for an odd element commuting with the whole even part. Any
//! automorphism of `H` is inner, `e a e⁻¹ = q a q⁻¹`, so `q⁻¹e` is such an
//! element; the linear solve finds one without computing `q`.

pub(crate) mod canonical;
mod classify;
mod even;
mod realify;

pub use canonical::canonical;
pub use classify::{classify, invariant_tuple, is_super_division, SuperDivisionCertificate};
pub use even::recognize_even_division;
pub use realify::realify;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::is_zero_vec;
use crate::scalar::{Rational, Scalar, Sign};
use crate::superalg::SuperAlgebra;

/// Which of `R`, `C`, `H` an even part is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EvenType {
    R,
    C,
    H,
}

impl EvenType {
    pub fn dim(self) -> usize {
        match self {
            EvenType::R => 1,
            EvenType::C => 2,
            EvenType::H => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Commutation {
    Commutes,
    Anticommutes,
    #[serde(rename = "n/a")]
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SquareSign {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
    #[serde(rename = "irrelevant")]
    Irrelevant,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl SquareSign {
    fn of(sign: Sign) -> Option<SquareSign> {
        match sign {
            Sign::Positive => Some(SquareSign::Plus),
            Sign::Negative => Some(SquareSign::Minus),
            Sign::Zero => None,
        }
    }
}

/// The ten real super division algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TenfoldClass {
    R,
    C,
    H,
    #[serde(rename = "R_plus")]
    RPlus,
    #[serde(rename = "R_minus")]
    RMinus,
    #[serde(rename = "C_comm")]
    CComm,
    #[serde(rename = "C_anti_plus")]
    CAntiPlus,
    #[serde(rename = "C_anti_minus")]
    CAntiMinus,
    #[serde(rename = "H_plus")]
    HPlus,
    #[serde(rename = "H_minus")]
    HMinus,
}

impl TenfoldClass {
    pub const ALL: [TenfoldClass; 10] = [
        TenfoldClass::R,
        TenfoldClass::C,
        TenfoldClass::H,
        TenfoldClass::RPlus,
        TenfoldClass::RMinus,
        TenfoldClass::CComm,
        TenfoldClass::CAntiPlus,
        TenfoldClass::CAntiMinus,
        TenfoldClass::HPlus,
        TenfoldClass::HMinus,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TenfoldClass::R => "R",
            TenfoldClass::C => "C",
            TenfoldClass::H => "H",
            TenfoldClass::RPlus => "R_plus",
            TenfoldClass::RMinus => "R_minus",
            TenfoldClass::CComm => "C_comm",
            TenfoldClass::CAntiPlus => "C_anti_plus",
            TenfoldClass::CAntiMinus => "C_anti_minus",
            TenfoldClass::HPlus => "H_plus",
            TenfoldClass::HMinus => "H_minus",
        }
    }

    pub fn from_label(label: &str) -> Option<TenfoldClass> {
        Self::ALL.into_iter().find(|c| c.label() == label)
    }

    pub fn even_type(self) -> EvenType {
        use TenfoldClass::*;
        match self {
            R | RPlus | RMinus => EvenType::R,
            C | CComm | CAntiPlus | CAntiMinus => EvenType::C,
            H | HPlus | HMinus => EvenType::H,
        }
    }

    pub fn has_odd(self) -> bool {
        !matches!(self, TenfoldClass::R | TenfoldClass::C | TenfoldClass::H)
    }

    pub fn e_square(self) -> SquareSign {
        use TenfoldClass::*;
        match self {
            R | C | H => SquareSign::NotApplicable,
            CComm => SquareSign::Irrelevant,
            RPlus | CAntiPlus | HPlus => SquareSign::Plus,
            RMinus | CAntiMinus | HMinus => SquareSign::Minus,
        }
    }

    pub fn commutation(self) -> Commutation {
        use TenfoldClass::*;
        match self {
            R | C | H | RPlus | RMinus => Commutation::NotApplicable,
            CComm | HPlus | HMinus => Commutation::Commutes,
            CAntiPlus | CAntiMinus => Commutation::Anticommutes,
        }
    }

    /// The class with the given invariants, if that combination is one of
    /// the ten.
    pub fn from_parts(
        even: EvenType,
        has_odd: bool,
        commutation: Commutation,
        e_square: SquareSign,
    ) -> Option<TenfoldClass> {
        Self::ALL.into_iter().find(|c| {
            c.even_type() == even && c.has_odd() == has_odd && c.commutation() == commutation && c.e_square() == e_square
        })
    }
}

impl std::fmt::Display for TenfoldClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// The identified even part together with a checkable witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum EvenPartType {
    R,
    /// `u² = -d·1` with `d > 0`.
    C { u: Vec<Rational>, d: Rational },
    /// A basis of the trace-zero part with `uv + vu = -2 B(u,v)·1` and `B`
    /// positive definite.
    H {
        pure_basis: Vec<Vec<Rational>>,
        gram: Vec<Vec<Rational>>,
    },
}

impl EvenPartType {
    pub fn label(&self) -> EvenType {
        match self {
            EvenPartType::R => EvenType::R,
            EvenPartType::C { .. } => EvenType::C,
            EvenPartType::H { .. } => EvenType::H,
        }
    }

    /// Moves witness coordinates into an ambient algebra, given the ambient
    /// index of each basis element of the algebra they were computed in.
    pub fn embed(&self, indices: &[usize], ambient_dim: usize) -> EvenPartType {
        let lift = |v: &Vec<Rational>| embed_coords(v, indices, ambient_dim);
        match self {
            EvenPartType::R => EvenPartType::R,
            EvenPartType::C { u, d } => EvenPartType::C { u: lift(u), d: d.clone() },
            EvenPartType::H { pure_basis, gram } => EvenPartType::H {
                pure_basis: pure_basis.iter().map(lift).collect(),
                gram: gram.clone(),
            },
        }
    }

    /// Rechecks the witness equations in `alg`.
    pub fn verify(&self, alg: &SuperAlgebra<Rational>) -> bool {
        match self {
            EvenPartType::R => true,
            EvenPartType::C { u, d } => {
                d.sign() == Sign::Positive
                    && alg.unit_multiple(&alg.mul_coords(u, u)) == Some(d.neg())
            }
            EvenPartType::H { pure_basis, gram } => {
                if pure_basis.len() != 3 || gram.len() != 3 {
                    return false;
                }
                for a in 0..3 {
                    for b in 0..3 {
                        let (u, v) = (&pure_basis[a], &pure_basis[b]);
                        let s = crate::linalg::add_vec(&alg.mul_coords(u, v), &alg.mul_coords(v, u));
                        if alg.unit_multiple(&s) != Some(gram[a][b].mul(&Rational::integer(-2))) {
                            return false;
                        }
                    }
                }
                even::leading_minors(gram).iter().all(|m| m.sign() == Sign::Positive)
            }
        }
    }
}

pub(crate) fn embed_coords(v: &[Rational], indices: &[usize], ambient_dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); ambient_dim];
    for (c, &k) in v.iter().zip(indices) {
        out[k] = c.clone();
    }
    out
}

/// A checkable certificate that an algebra is not a (super) division
/// algebra over the reals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DivisionWitness {
    /// A nonzero element without an inverse.
    ZeroDivisor { element: Vec<Rational> },
    /// `w² = c·1` with `c > 0` not a rational square and `w` not a multiple
    /// of the unit, so `(w - √c)(w + √c) = 0` over the reals.
    SplitSquare { element: Vec<Rational>, square: Rational },
    /// Two trace-zero elements whose anticommutator is not a multiple of the
    /// unit, impossible in the quaternions.
    NonScalarAnticommutator { u: Vec<Rational>, v: Vec<Rational> },
    /// The only real division algebras have dimension 1, 2 or 4.
    BadDimension { dim: usize },
}

impl DivisionWitness {
    /// The witnessing element, for the variants that have one.
    pub fn element(&self) -> Option<&[Rational]> {
        match self {
            DivisionWitness::ZeroDivisor { element } | DivisionWitness::SplitSquare { element, .. } => Some(element),
            _ => None,
        }
    }

    pub(crate) fn embed(&self, indices: &[usize], ambient_dim: usize) -> DivisionWitness {
        let lift = |v: &Vec<Rational>| embed_coords(v, indices, ambient_dim);
        match self {
            DivisionWitness::ZeroDivisor { element } => DivisionWitness::ZeroDivisor { element: lift(element) },
            DivisionWitness::SplitSquare { element, square } => DivisionWitness::SplitSquare {
                element: lift(element),
                square: square.clone(),
            },
            DivisionWitness::NonScalarAnticommutator { u, v } => {
                DivisionWitness::NonScalarAnticommutator { u: lift(u), v: lift(v) }
            }
            DivisionWitness::BadDimension { dim } => DivisionWitness::BadDimension { dim: *dim },
        }
    }

    /// Checks the certificate against `alg`. Elements must be homogeneous.
    pub fn verify(&self, alg: &SuperAlgebra<Rational>) -> bool {
        match self {
            DivisionWitness::ZeroDivisor { element } => {
                element.len() == alg.dim()
                    && !is_zero_vec(element)
                    && alg.parity_tag(element).is_homogeneous()
                    && !alg.is_invertible(element)
            }
            DivisionWitness::SplitSquare { element, square } => {
                element.len() == alg.dim()
                    && alg.parity_tag(element).is_homogeneous()
                    && alg.unit_multiple(element).is_none()
                    && square.sign() == Sign::Positive
                    && alg.unit_multiple(&alg.mul_coords(element, element)).as_ref() == Some(square)
            }
            DivisionWitness::NonScalarAnticommutator { u, v } => {
                let s = crate::linalg::add_vec(&alg.mul_coords(u, v), &alg.mul_coords(v, u));
                alg.unit_multiple(&s).is_none()
            }
            DivisionWitness::BadDimension { dim } => !matches!(dim, 1 | 2 | 4),
        }
    }

    pub fn describe(&self, alg: &SuperAlgebra<Rational>) -> String {
        match self {
            DivisionWitness::ZeroDivisor { element } => {
                let sq = alg.mul_coords(element, element);
                if is_zero_vec(&sq) {
                    format!("{} is nonzero with square 0", alg.format_coords(element))
                } else {
                    format!("{} is nonzero and not invertible", alg.format_coords(element))
                }
            }
            DivisionWitness::SplitSquare { element, square } => format!(
                "({})² = {square}·1 with {square} > 0, so it splits over the reals",
                alg.format_coords(element)
            ),
            DivisionWitness::NonScalarAnticommutator { u, v } => format!(
                "trace-zero elements {} and {} have a non-scalar anticommutator",
                alg.format_coords(u),
                alg.format_coords(v)
            ),
            DivisionWitness::BadDimension { dim } => {
                format!("even part has dimension {dim}, but real division algebras have dimension 1, 2 or 4")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("not a division algebra")]
    NotDivision(DivisionWitness),
    #[error("not a super division algebra")]
    NotSuperDivision(DivisionWitness),
    /// A case the classification argument rules out. Either the input
    /// violated a precondition or there is a bug.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

impl ClassifyError {
    pub fn witness(&self) -> Option<&DivisionWitness> {
        match self {
            ClassifyError::NotDivision(w) | ClassifyError::NotSuperDivision(w) => Some(w),
            ClassifyError::InternalContradiction(_) => None,
        }
    }
}

/// Outcome of running the classification argument on an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    #[serde(rename = "label")]
    pub class: TenfoldClass,
    pub even_dim: usize,
    pub odd_dim: usize,
    /// The odd element the argument starts from (first odd basis element).
    pub chosen_e: Option<Vec<Rational>>,
    /// Odd element commuting with the even part (quaternionic case only).
    pub recentered_e: Option<Vec<Rational>>,
    /// `λ` with `e² = λ·1` for the generator whose square decides the class.
    pub e_square: Option<Rational>,
    /// Even-part witness in ambient coordinates.
    pub even_witness: EvenPartType,
    pub trace: Vec<String>,
}

/// Distinctness certificate: `(dim A₀, has odd part, commutation, sign e²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InvariantTuple {
    pub even_dim: usize,
    pub has_odd: bool,
    pub commutation: Commutation,
    pub e_square: SquareSign,
}
