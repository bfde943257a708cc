//! Isomorphism certificates between Clifford algebras and tensor products.
//!
//! A map from `Cl(p,q)` is determined by the images of its generators. It is
//! an isomorphism onto the target when the images are odd, square to the
//! right signs, pairwise anticommute, and their ordered products span the
//! whole target. The last condition forces `dim target = 2^{p+q}`.

use serde::Serialize;

use super::{
    brauer_wall, clifford_real, end_superalgebra, monomial_order, CliffordError, CliffordSignature,
};
use crate::divclass::{self, canonical::division_algebra, ClassifyError, EvenType, TenfoldClass};
use crate::linalg::{self, neg_vec, span_rank};
use crate::scalar::{Rational, Scalar};
use crate::superalg::{graded_tensor, ParityTag, SuperAlgebra};

/// Candidate isomorphism `Cl(source) → target` given by generator images.
#[derive(Debug, Clone)]
pub struct GeneratorMap {
    pub source: CliffordSignature,
    pub target: SuperAlgebra<Rational>,
    pub target_name: String,
    pub images: Vec<Vec<Rational>>,
}

/// A verified generator map, ready for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapCertificate {
    pub source: CliffordSignature,
    pub target: String,
    pub images: Vec<Vec<Rational>>,
    pub image_names: Vec<String>,
    pub span_dim: usize,
}

pub fn verify_generator_map(map: &GeneratorMap) -> Result<MapCertificate, CliffordError> {
    let target = &map.target;
    let squares = map.source.squares();
    if map.images.len() != squares.len() {
        return Err(CliffordError::RelationFailure(format!(
            "{} images for {} generators",
            map.images.len(),
            squares.len()
        )));
    }
    for (index, x) in map.images.iter().enumerate() {
        if x.len() != target.dim() || linalg::is_zero_vec(x) || target.parity_tag(x) != ParityTag::Odd {
            return Err(CliffordError::ImageNotOdd { index });
        }
    }
    let unit = target.unit();
    for (a, x) in map.images.iter().enumerate() {
        let sq = target.mul_coords(x, x);
        if sq != linalg::scale_vec(&squares[a], unit) {
            return Err(CliffordError::RelationFailure(format!(
                "image of generator {} squares to {}, expected {}",
                a + 1,
                target.format_coords(&sq),
                squares[a]
            )));
        }
        for (b, y) in map.images.iter().enumerate().skip(a + 1) {
            let xy = target.mul_coords(x, y);
            if xy != neg_vec(&target.mul_coords(y, x)) {
                return Err(CliffordError::RelationFailure(format!(
                    "images of generators {} and {} do not anticommute",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    let products: Vec<Vec<Rational>> = monomial_order(squares.len())
        .iter()
        .map(|s| {
            s.iter()
                .fold(unit.to_vec(), |acc, &g| target.mul_coords(&acc, &map.images[g]))
        })
        .collect();
    let rank = span_rank(&products);
    if rank != target.dim() || products.len() != target.dim() {
        return Err(CliffordError::SpanDeficient {
            rank,
            expected: target.dim(),
        });
    }
    Ok(MapCertificate {
        source: map.source,
        target: map.target_name.clone(),
        image_names: map.images.iter().map(|x| target.format_coords(x)).collect(),
        images: map.images.clone(),
        span_dim: rank,
    })
}

fn tensor_index(i: usize, j: usize, inner_dim: usize) -> usize {
    i * inner_dim + j
}

/// Builds and verifies `Cl(p+1,q+1) ≅ Cl(p,q) ⊗̂ Cl(1,1)`.
///
/// The positive generators go to `e_1⊗1, …, e_p⊗1, 1⊗f_1` and the negative
/// ones to `e_{p+1}⊗1, …, e_{p+q}⊗1, 1⊗f_2`. Since both tensor factors of
/// each image are odd or trivial, the Koszul sign makes `e_i⊗1` and `1⊗f_k`
/// anticommute.
pub fn verify_periodicity(sig: CliffordSignature) -> Result<MapCertificate, CliffordError> {
    let source = CliffordSignature::new(sig.p() + 1, sig.q() + 1)?;
    let small = clifford_real(sig);
    let hyperbolic = clifford_real(CliffordSignature::new(1, 1)?);
    let target = graded_tensor(&small, &hyperbolic)?;
    let n = target.dim();
    let basis = |k| {
        let mut v = vec![Rational::zero(); n];
        v[k] = Rational::one();
        v
    };
    let e = |i: usize| basis(tensor_index(1 + i, 0, 4));
    let f = |k: usize| basis(tensor_index(0, k, 4));

    let mut images: Vec<Vec<Rational>> = (0..sig.p()).map(e).collect();
    images.push(f(1));
    images.extend((sig.p()..sig.generators()).map(e));
    images.push(f(2));
    verify_generator_map(&GeneratorMap {
        source,
        target,
        target_name: format!("{sig} ⊗̂ Cl(1,1)"),
        images,
    })
}

/// `Cl(1,1) ≅ End(R^{1|1})` via `e_1 ↦ E12 + E21`, `e_2 ↦ E12 - E21`.
pub fn clifford11_matrix_certificate() -> Result<MapCertificate, CliffordError> {
    let target = end_superalgebra(1, 1)?;
    let (e12, e21) = (target.basis_vector(1), target.basis_vector(2));
    let images = vec![linalg::add_vec(&e12, &e21), linalg::sub_vec(&e12, &e21)];
    verify_generator_map(&GeneratorMap {
        source: CliffordSignature::new(1, 1)?,
        target,
        target_name: "End(R^{1|1})".into(),
        images,
    })
}

/// `Cl(4,0) ≅ H ⊗̂ Cl(1,1)` via `1⊗f_1, i⊗f_2, j⊗f_2, k⊗f_2`, placing the
/// purely even quaternions in Brauer–Wall class 4.
pub fn class4_certificate() -> Result<MapCertificate, CliffordError> {
    let h = division_algebra(EvenType::H);
    let hyperbolic = clifford_real(CliffordSignature::new(1, 1)?);
    let target = graded_tensor(&h, &hyperbolic)?;
    let n = target.dim();
    let basis = |k| {
        let mut v = vec![Rational::zero(); n];
        v[k] = Rational::one();
        v
    };
    let images = vec![
        basis(tensor_index(0, 1, 4)),
        basis(tensor_index(1, 2, 4)),
        basis(tensor_index(2, 2, 4)),
        basis(tensor_index(3, 2, 4)),
    ];
    verify_generator_map(&GeneratorMap {
        source: CliffordSignature::new(4, 0)?,
        target,
        target_name: "H ⊗̂ Cl(1,1)".into(),
        images,
    })
}

/// A chain of verified `(1,1)`-reductions down to a signature with `p = 0`
/// or `q = 0`.
#[derive(Debug, Clone, Serialize)]
pub struct Reduction {
    pub start: CliffordSignature,
    pub end: CliffordSignature,
    pub steps: Vec<MapCertificate>,
}

pub fn reduce(sig: CliffordSignature) -> Result<Reduction, CliffordError> {
    let mut current = sig;
    let mut steps = Vec::new();
    while current.p() > 0 && current.q() > 0 {
        let smaller = CliffordSignature::new(current.p() - 1, current.q() - 1)?;
        steps.push(verify_periodicity(smaller)?);
        current = smaller;
    }
    Ok(Reduction {
        start: sig,
        end: current,
        steps,
    })
}

/// One Brauer–Wall class with the super division algebra representing it.
#[derive(Debug, Clone, Serialize)]
pub struct MoritaEntry {
    pub class: u8,
    pub signature: CliffordSignature,
    pub reduction: Reduction,
    pub label: TenfoldClass,
    /// Present for class 4, whose reduced form `Cl(4,0)` is not itself a
    /// super division algebra.
    pub certificate: Option<MapCertificate>,
}

#[derive(Debug, thiserror::Error)]
pub enum MoritaError {
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("class {class}: {detail}")]
    Mismatch { class: u8, detail: String },
}

/// Representatives of all eight real Brauer–Wall classes, each reduced by
/// verified periodicity steps and classified.
pub fn morita_table() -> Result<Vec<MoritaEntry>, MoritaError> {
    const REPRESENTATIVES: [(usize, usize); 8] = [(2, 2), (2, 1), (3, 1), (4, 1), (4, 0), (1, 4), (1, 3), (1, 2)];
    let mut out = Vec::with_capacity(8);
    for (p, q) in REPRESENTATIVES {
        let sig = CliffordSignature::new(p, q)?;
        let class = brauer_wall(sig).value;
        let reduction = reduce(sig)?;
        let (label, certificate) = if reduction.end == CliffordSignature::new(4, 0)? {
            let cert = class4_certificate()?;
            let label = divclass::classify(&division_algebra(EvenType::H))?.class;
            (label, Some(cert))
        } else {
            (divclass::classify(&clifford_real(reduction.end))?.class, None)
        };
        if brauer_wall(reduction.end).value != class {
            return Err(MoritaError::Mismatch {
                class,
                detail: format!("reduction ended at {} in another class", reduction.end),
            });
        }
        out.push(MoritaEntry {
            class,
            signature: sig,
            reduction,
            label,
            certificate,
        });
    }
    Ok(out)
}
