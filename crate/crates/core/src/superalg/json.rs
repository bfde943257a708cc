//! JSON interchange for superalgebras:
//! `{"field":"R"|"C","dim":n,"parity":[..],"unit":[..],"mul":[[[..]..]..]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{graded_tensor, AlgebraError, Parity, SuperAlgebra, Validation};
use crate::scalar::{FieldTag, GaussianRational, Rational, Scalar};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc<F> {
    field: FieldTag,
    dim: usize,
    parity: Vec<u8>,
    unit: Vec<F>,
    mul: Vec<Vec<Vec<F>>>,
}

#[derive(Deserialize)]
struct FieldProbe {
    field: FieldTag,
}

impl<F: Scalar> SuperAlgebra<F> {
    pub fn to_json(&self) -> String {
        let doc = AlgebraDoc {
            field: F::FIELD,
            dim: self.dim(),
            parity: self.parity().iter().map(|p| p.bit()).collect(),
            unit: self.unit().to_vec(),
            mul: self.table(),
        };
        serde_json::to_string(&doc).expect("algebra documents always serialize")
    }

    /// Parses and fully validates an algebra over this field.
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        Self::from_json_with(text, Validation::Full)
    }

    pub fn from_json_with(text: &str, validation: Validation) -> Result<Self, FormatError> {
        let doc: AlgebraDoc<F> = serde_json::from_str(text)?;
        if doc.field != F::FIELD {
            return Err(FormatError::Invalid(format!(
                "expected field {}, found {}",
                F::FIELD.as_str(),
                doc.field.as_str()
            )));
        }
        if doc.parity.len() != doc.dim {
            return Err(FormatError::Invalid(format!(
                "parity vector has length {}, dim is {}",
                doc.parity.len(),
                doc.dim
            )));
        }
        let parity = doc
            .parity
            .iter()
            .map(|&b| Parity::from_bit(b).ok_or_else(|| FormatError::Invalid(format!("parity entry {b} is not 0 or 1"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SuperAlgebra::with_validation(parity, doc.mul, doc.unit, validation)?)
    }
}

/// A superalgebra over either ground field, as read from an interchange file.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyAlgebra {
    Real(SuperAlgebra<Rational>),
    Complex(SuperAlgebra<GaussianRational>),
}

impl AnyAlgebra {
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let probe: FieldProbe = serde_json::from_str(text)?;
        Ok(match probe.field {
            FieldTag::Real => AnyAlgebra::Real(SuperAlgebra::from_json(text)?),
            FieldTag::Complex => AnyAlgebra::Complex(SuperAlgebra::from_json(text)?),
        })
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyAlgebra::Real(a) => a.to_json(),
            AnyAlgebra::Complex(a) => a.to_json(),
        }
    }

    pub fn field(&self) -> FieldTag {
        match self {
            AnyAlgebra::Real(_) => FieldTag::Real,
            AnyAlgebra::Complex(_) => FieldTag::Complex,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Real(a) => a.dim(),
            AnyAlgebra::Complex(a) => a.dim(),
        }
    }

    pub fn parity(&self) -> &[Parity] {
        match self {
            AnyAlgebra::Real(a) => a.parity(),
            AnyAlgebra::Complex(a) => a.parity(),
        }
    }

    pub fn tensor(&self, other: &AnyAlgebra) -> Result<AnyAlgebra, AlgebraError> {
        match (self, other) {
            (AnyAlgebra::Real(a), AnyAlgebra::Real(b)) => Ok(AnyAlgebra::Real(graded_tensor(a, b)?)),
            (AnyAlgebra::Complex(a), AnyAlgebra::Complex(b)) => Ok(AnyAlgebra::Complex(graded_tensor(a, b)?)),
            _ => Err(AlgebraError::FieldMismatch),
        }
    }
}

impl From<SuperAlgebra<Rational>> for AnyAlgebra {
    fn from(a: SuperAlgebra<Rational>) -> Self {
        AnyAlgebra::Real(a)
    }
}

impl From<SuperAlgebra<GaussianRational>> for AnyAlgebra {
    fn from(a: SuperAlgebra<GaussianRational>) -> Self {
        AnyAlgebra::Complex(a)
    }
}
