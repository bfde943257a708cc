//! The threefold way for finite matrix groups.
//!
//! Everything is first-principles linear algebra: the commutant `End(ρ)` is
//! the nullspace of the commutation equations, its structure constants are
//! read off in the computed basis, and the result is handed to the division
//! algebra recognizer. For a finite group, a commutant that is not a
//! division algebra means the representation is reducible.
//!
//! Only the Gaussian rationals are available as complex scalars, so groups
//! whose faithful representations need other roots of unity (a faithful
//! one-dimensional representation of `C₃`, say) cannot be entered.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::divclass::{self, realify, ClassifyError, DivisionWitness, EvenPartType, EvenType};
use crate::linalg::Matrix;
use crate::scalar::{FieldTag, GaussianRational, Rational, Scalar, Sign};
use crate::superalg::{Parity, SuperAlgebra, Validation};

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("group closure exceeded {0} elements")]
    ClosureExceeded(usize),
    #[error("generator {0} is not invertible")]
    NotInvertible(usize),
    #[error("generator {index} is not a {degree}x{degree} matrix")]
    Shape { index: usize, degree: usize },
    #[error("representation is not irreducible: commutant has dimension {0}")]
    NotIrreducible(usize),
    #[error("indicator sum {0} is not one of +1, 0, -1")]
    IndicatorOutOfRange(String),
}

/// Scalars whose commutant algebras can be viewed as real algebras.
pub trait GroundField: Scalar {
    fn real_form(alg: &SuperAlgebra<Self>) -> SuperAlgebra<Rational>;
}

impl GroundField for Rational {
    fn real_form(alg: &SuperAlgebra<Self>) -> SuperAlgebra<Rational> {
        alg.clone()
    }
}

impl GroundField for GaussianRational {
    fn real_form(alg: &SuperAlgebra<Self>) -> SuperAlgebra<Rational> {
        realify(alg)
    }
}

/// A finite group of invertible matrices with its full element list.
#[derive(Clone)]
pub struct GroupRep<F> {
    degree: usize,
    generators: Vec<Matrix<F>>,
    elements: Vec<Matrix<F>>,
    lookup: HashMap<Matrix<F>, usize>,
}

impl<F: Scalar> std::fmt::Debug for GroupRep<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupRep")
            .field("degree", &self.degree)
            .field("order", &self.elements.len())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Breadth-first closure of the generators under right multiplication.
/// Elements are listed in discovery order, starting with the identity.
pub fn group_closure<F: Scalar>(degree: usize, generators: Vec<Matrix<F>>, cap: usize) -> Result<GroupRep<F>, RepError> {
    for (index, g) in generators.iter().enumerate() {
        if g.rows() != degree || g.cols() != degree {
            return Err(RepError::Shape { index, degree });
        }
        if !g.is_invertible() {
            return Err(RepError::NotInvertible(index));
        }
    }
    let identity = Matrix::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut lookup = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for g in &generators {
            let y = elements[x].mul_mat(g);
            if lookup.contains_key(&y) {
                continue;
            }
            if elements.len() == cap {
                return Err(RepError::ClosureExceeded(cap));
            }
            lookup.insert(y.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(y);
        }
    }
    Ok(GroupRep {
        degree,
        generators,
        elements,
        lookup,
    })
}

impl<F: Scalar> GroupRep<F> {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Matrix<F>] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix<F>] {
        &self.elements
    }

    pub fn index_of(&self, m: &Matrix<F>) -> Option<usize> {
        self.lookup.get(m).copied()
    }

    /// The representation `g ↦ P⁻¹ ρ(g) P`, element order preserved.
    pub fn conjugate(&self, p: &Matrix<F>) -> Option<GroupRep<F>> {
        let p_inv = p.inverse()?;
        let conj = |m: &Matrix<F>| p_inv.mul_mat(m).mul_mat(p);
        Some(self.map_matrices(conj))
    }

    fn map_matrices<G: Scalar>(&self, f: impl Fn(&Matrix<F>) -> Matrix<G>) -> GroupRep<G> {
        let elements: Vec<Matrix<G>> = self.elements.iter().map(&f).collect();
        let lookup = elements.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        GroupRep {
            degree: self.degree,
            generators: self.generators.iter().map(&f).collect(),
            elements,
            lookup,
        }
    }

    /// Block-diagonal generators `ρ(g_k) ⊕ σ(g_k)`, pairing generators in
    /// order. `None` if the generator counts differ.
    pub fn direct_sum_generators(&self, other: &GroupRep<F>) -> Option<Vec<Matrix<F>>> {
        if self.generators.len() != other.generators.len() {
            return None;
        }
        let n = self.degree + other.degree;
        Some(
            self.generators
                .iter()
                .zip(&other.generators)
                .map(|(a, b)| {
                    let mut m = Matrix::zeros(n, n);
                    for i in 0..self.degree {
                        for j in 0..self.degree {
                            m[(i, j)] = a[(i, j)].clone();
                        }
                    }
                    for i in 0..other.degree {
                        for j in 0..other.degree {
                            m[(self.degree + i, self.degree + j)] = b[(i, j)].clone();
                        }
                    }
                    m
                })
                .collect(),
        )
    }
}

/// Extension of scalars from the rationals to the Gaussian rationals.
pub fn complexify(rep: &GroupRep<Rational>) -> GroupRep<GaussianRational> {
    rep.map_matrices(|m| {
        Matrix::from_vec(m.rows(), m.cols(), m.data().iter().cloned().map(GaussianRational::from).collect())
            .expect("same shape")
    })
}

/// `End(ρ)` with its identified division type.
#[derive(Clone)]
pub struct CommutantResult<F> {
    pub basis: Vec<Matrix<F>>,
    pub dimension: usize,
    /// The commutant as an abstract algebra on `basis`.
    pub algebra: SuperAlgebra<F>,
    /// Type of the commutant viewed as a real algebra, or a witness that it
    /// is not a division algebra.
    pub division_type: Result<EvenPartType, DivisionWitness>,
}

impl<F: Scalar> std::fmt::Debug for CommutantResult<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CommutantResult")
            .field("dimension", &self.dimension)
            .field("basis", &self.basis)
            .field("division_type", &self.division_type)
            .finish()
    }
}

pub fn commutant<F: GroundField>(rep: &GroupRep<F>) -> CommutantResult<F> {
    let n = rep.degree;
    let nn = n * n;
    // Row (a,b) of T G - G T in terms of the unknowns T_xy.
    let blocks: Vec<Matrix<F>> = rep
        .generators
        .iter()
        .map(|g| {
            let mut m = Matrix::zeros(nn, nn);
            for a in 0..n {
                for b in 0..n {
                    for x in 0..n {
                        for y in 0..n {
                            let mut c = F::zero();
                            if x == a {
                                c = c.add(&g[(y, b)]);
                            }
                            if y == b {
                                c = c.sub(&g[(a, x)]);
                            }
                            m[(a * n + b, x * n + y)] = c;
                        }
                    }
                }
            }
            m
        })
        .collect();
    let vectors = if blocks.is_empty() {
        Matrix::<F>::zeros(1, nn).nullspace()
    } else {
        Matrix::vstack(&blocks).expect("equal widths").nullspace()
    };
    let basis: Vec<Matrix<F>> = vectors
        .iter()
        .map(|v| Matrix::from_vec(n, n, v.clone()).expect("n² entries"))
        .collect();
    let algebra = matrix_algebra(&basis, &vectors);
    let division_type = match divclass::recognize_even_division(&F::real_form(&algebra)) {
        Ok(ty) => Ok(ty),
        Err(ClassifyError::NotDivision(w)) | Err(ClassifyError::NotSuperDivision(w)) => Err(w),
        Err(ClassifyError::InternalContradiction(msg)) => unreachable!("recognizer never reports {msg}"),
    };
    CommutantResult {
        dimension: basis.len(),
        basis,
        algebra,
        division_type,
    }
}

/// Structure constants of a matrix algebra in the given (flattened) basis.
fn matrix_algebra<F: Scalar>(basis: &[Matrix<F>], flat: &[Vec<F>]) -> SuperAlgebra<F> {
    let d = basis.len();
    let n = basis[0].rows();
    let span = Matrix::from_columns(flat).expect("equal lengths");
    let coords = |m: &Matrix<F>| -> Vec<F> {
        span.solve(m.data())
            .particular
            .expect("commutant is closed under multiplication")
    };
    let mul = basis
        .iter()
        .map(|a| basis.iter().map(|b| coords(&a.mul_mat(b))).collect())
        .collect();
    let unit = coords(&Matrix::identity(n));
    SuperAlgebra::with_validation(vec![Parity::Even; d], mul, unit, Validation::Full)
        .expect("commutant of a matrix group is an associative unital algebra")
        .with_names((0..d).map(|k| format!("T{}", k + 1)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SchurType {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "H")]
    Quaternionic,
    #[serde(rename = "reducible")]
    Reducible,
}

impl SchurType {
    pub fn as_str(self) -> &'static str {
        match self {
            SchurType::Real => "R",
            SchurType::Complex => "C",
            SchurType::Quaternionic => "H",
            SchurType::Reducible => "reducible",
        }
    }

    fn of<F>(c: &CommutantResult<F>) -> SchurType {
        match &c.division_type {
            Ok(ty) => match ty.label() {
                EvenType::R => SchurType::Real,
                EvenType::C => SchurType::Complex,
                EvenType::H => SchurType::Quaternionic,
            },
            Err(_) => SchurType::Reducible,
        }
    }
}

/// Real, complex or quaternionic type of a real representation.
pub fn schur_type(rep: &GroupRep<Rational>) -> SchurType {
    SchurType::of(&commutant(rep))
}

/// Frobenius–Schur indicator `(1/|G|) Σ_g χ(g²)` of an irreducible complex
/// representation.
pub fn fs_indicator(rep: &GroupRep<GaussianRational>) -> Result<i8, RepError> {
    let c = commutant(rep);
    if c.dimension != 1 {
        return Err(RepError::NotIrreducible(c.dimension));
    }
    let mut sum = GaussianRational::zero();
    for g in &rep.elements {
        let sq = g.mul_mat(g);
        let k = rep
            .index_of(&sq)
            .expect("a closed group contains the square of each element");
        sum = sum.add(&rep.elements[k].trace());
    }
    let value = sum
        .div(&GaussianRational::from_i64(rep.order() as i64))
        .expect("order is positive");
    match value.to_rational() {
        Some(v) if v == Rational::one() => Ok(1),
        Some(v) if v.is_zero() => Ok(0),
        Some(v) if v.sign() == Sign::Negative && v.neg() == Rational::one() => Ok(-1),
        _ => Err(RepError::IndicatorOutOfRange(value.to_string())),
    }
}

pub fn fs_string(v: i8) -> &'static str {
    match v {
        1 => "+1",
        0 => "0",
        _ => "-1",
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepDoc<F> {
    field: FieldTag,
    degree: usize,
    generators: Vec<Vec<F>>,
}

/// A representation read from the interchange format
/// `{"field": "R"|"C", "degree": n, "generators": [[scalar, ...], ...]}`,
/// each generator a row-major list of `n²` scalars.
#[derive(Debug, Clone)]
pub enum AnyRep {
    Real(GroupRep<Rational>),
    Complex(GroupRep<GaussianRational>),
}

#[derive(Debug, Error)]
pub enum RepFormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}

fn parse_generators<F: Scalar>(doc: RepDoc<F>) -> Result<(usize, Vec<Matrix<F>>), RepFormatError> {
    let n = doc.degree;
    if n == 0 {
        return Err(RepFormatError::Invalid("degree must be positive".into()));
    }
    let gens = doc
        .generators
        .into_iter()
        .enumerate()
        .map(|(k, g)| {
            Matrix::from_vec(n, n, g)
                .ok_or_else(|| RepFormatError::Invalid(format!("generator {k} does not have {} entries", n * n)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((n, gens))
}

impl AnyRep {
    pub fn from_json(text: &str, cap: usize) -> Result<AnyRep, RepFormatError> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let field: FieldTag = serde_json::from_value(value.get("field").cloned().unwrap_or_default())
            .map_err(|_| RepFormatError::Invalid("field must be \"R\" or \"C\"".into()))?;
        Ok(match field {
            FieldTag::Real => {
                let (n, gens) = parse_generators::<Rational>(serde_json::from_value(value)?)?;
                AnyRep::Real(group_closure(n, gens, cap)?)
            }
            FieldTag::Complex => {
                let (n, gens) = parse_generators::<GaussianRational>(serde_json::from_value(value)?)?;
                AnyRep::Complex(group_closure(n, gens, cap)?)
            }
        })
    }
}

impl<F: Scalar> GroupRep<F> {
    pub fn to_json(&self) -> String {
        let doc = RepDoc {
            field: F::FIELD,
            degree: self.degree,
            generators: self.generators.iter().map(|g| g.data().to_vec()).collect(),
        };
        serde_json::to_string(&doc).expect("representation documents always serialize")
    }
}

/// Summary in the interchange result format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepReport {
    pub order: usize,
    pub commutant_dim: usize,
    #[serde(rename = "type")]
    pub schur_type: SchurType,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fs: Option<&'static str>,
}

pub fn rep_report<F: GroundField>(rep: &GroupRep<F>) -> RepReport {
    let c = commutant(rep);
    RepReport {
        order: rep.order(),
        commutant_dim: c.dimension,
        schur_type: SchurType::of(&c),
        fs: None,
    }
}

/// Standard representations used as test fixtures and in the self-test.
pub mod fixtures {
    use super::*;
    use crate::scalar::r;

    fn real(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(rows.into_iter().map(|row| row.into_iter().map(r).collect()).collect()).expect("rectangular")
    }

    fn complex(rows: Vec<Vec<(i64, i64)>>) -> Matrix<GaussianRational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|row| row.into_iter().map(|(a, b)| GaussianRational::from_ints(a, b)).collect())
                .collect(),
        )
        .expect("rectangular")
    }

    fn close<F: Scalar>(degree: usize, gens: Vec<Matrix<F>>) -> GroupRep<F> {
        group_closure(degree, gens, DEFAULT_CLOSURE_CAP).expect("fixture groups are finite")
    }

    pub fn trivial_real(degree: usize) -> GroupRep<Rational> {
        close(degree, vec![Matrix::identity(degree)])
    }

    /// `C₄` acting on the plane by quarter turns.
    pub fn cyclic4_rotation() -> GroupRep<Rational> {
        close(2, vec![real(vec![vec![0, -1], vec![1, 0]])])
    }

    /// `C₄` acting on `C` by multiplication by `i`.
    pub fn cyclic4_complex() -> GroupRep<GaussianRational> {
        close(1, vec![complex(vec![vec![(0, 1)]])])
    }

    /// `Q₈` acting on `H = R⁴` by left multiplication.
    pub fn quaternion_left_regular() -> GroupRep<Rational> {
        let h = crate::divclass::canonical(crate::divclass::TenfoldClass::H);
        let li = h.left_mul_matrix(&h.basis_vector(1));
        let lj = h.left_mul_matrix(&h.basis_vector(2));
        close(4, vec![li, lj])
    }

    /// `Q₈` on `C²`: `i ↦ diag(i, -i)`, `j ↦ [[0,1],[-1,0]]`.
    pub fn quaternion_complex() -> GroupRep<GaussianRational> {
        close(
            2,
            vec![
                complex(vec![vec![(0, 1), (0, 0)], vec![(0, 0), (0, -1)]]),
                complex(vec![vec![(0, 0), (1, 0)], vec![(-1, 0), (0, 0)]]),
            ],
        )
    }

    /// `S₃` on the sum-zero plane, basis `e₁ - e₂`, `e₂ - e₃`.
    pub fn symmetric3_standard() -> GroupRep<Rational> {
        close(
            2,
            vec![
                // (1 2)
                real(vec![vec![-1, 1], vec![0, 1]]),
                // (1 2 3)
                real(vec![vec![0, -1], vec![1, -1]]),
            ],
        )
    }

    /// Two copies of the trivial representation of `C₂`.
    pub fn trivial_sum() -> GroupRep<Rational> {
        trivial_real(2)
    }
}
