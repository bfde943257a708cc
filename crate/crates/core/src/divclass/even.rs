//! Constructive recognition of `R`, `C` and `H` among unital real algebras.

use super::{ClassifyError, DivisionWitness, EvenPartType};
use crate::linalg::{self, Matrix};
use crate::scalar::{q, r, Rational, Scalar, Sign};
use crate::superalg::SuperAlgebra;

/// Decides whether a unital algebra (the even part of a superalgebra; the
/// grading is ignored) is one of the real division algebras, returning a
/// verified witness either way.
pub fn recognize_even_division(alg: &SuperAlgebra<Rational>) -> Result<EvenPartType, ClassifyError> {
    match alg.dim() {
        1 => Ok(EvenPartType::R),
        2 => recognize_two(alg),
        4 => recognize_four(alg),
        dim => Err(ClassifyError::NotDivision(
            find_zero_divisor(alg).unwrap_or(DivisionWitness::BadDimension { dim }),
        )),
    }
}

fn recognize_two(alg: &SuperAlgebra<Rational>) -> Result<EvenPartType, ClassifyError> {
    let unit = alg.unit().to_vec();
    let x = (0..2)
        .map(|k| alg.basis_vector(k))
        .find(|b| alg.unit_multiple(b).is_none())
        .expect("a two-dimensional algebra has a basis element outside span(1)");
    // x² = α·1 + β·x
    let x2 = alg.mul_coords(&x, &x);
    let basis = Matrix::from_columns(&[unit.clone(), x.clone()]).expect("2x2");
    let coeffs = basis
        .solve(&x2)
        .particular
        .expect("{1, x} is a basis of a two-dimensional algebra");
    let (alpha, beta) = (&coeffs[0], &coeffs[1]);
    let disc = beta.mul(beta).add(&alpha.mul(&r(4)));

    if disc.sign() == Sign::Negative {
        let u = linalg::sub_vec(&linalg::scale_vec(&r(2), &x), &linalg::scale_vec(beta, &unit));
        return Ok(EvenPartType::C { u, d: disc.neg() });
    }
    // t² - βt - α has real roots (β ± √disc)/2, and (x - r₁)(x - r₂) = 0.
    let witness = match disc.sqrt_exact() {
        Some(s) => {
            let root = beta.sub(&s).mul(&q(1, 2));
            DivisionWitness::ZeroDivisor {
                element: linalg::sub_vec(&x, &linalg::scale_vec(&root, &unit)),
            }
        }
        None => DivisionWitness::SplitSquare {
            element: linalg::sub_vec(&linalg::scale_vec(&r(2), &x), &linalg::scale_vec(beta, &unit)),
            square: disc,
        },
    };
    Err(ClassifyError::NotDivision(witness))
}

fn recognize_four(alg: &SuperAlgebra<Rational>) -> Result<EvenPartType, ClassifyError> {
    // Trace form t(x) = Tr(L_x)/4; its kernel is the pure part.
    let trace_row: Vec<Rational> = (0..4)
        .map(|k| alg.left_mul_matrix(&alg.basis_vector(k)).trace().mul(&q(1, 4)))
        .collect();
    let pure = Matrix::from_rows(vec![trace_row]).expect("1x4").nullspace();
    debug_assert_eq!(pure.len(), 3, "t(1) = 1, so the trace form is nonzero");

    let mut gram = vec![vec![Rational::zero(); 3]; 3];
    for a in 0..3 {
        for b in a..3 {
            let (u, v) = (&pure[a], &pure[b]);
            let anti = linalg::add_vec(&alg.mul_coords(u, v), &alg.mul_coords(v, u));
            let Some(lambda) = alg.unit_multiple(&anti) else {
                let witness = find_zero_divisor(alg)
                    .unwrap_or_else(|| DivisionWitness::NonScalarAnticommutator { u: u.clone(), v: v.clone() });
                return Err(ClassifyError::NotDivision(witness));
            };
            // uv + vu = -2 B(u,v)·1
            let b_uv = lambda.mul(&q(-1, 2));
            gram[a][b] = b_uv.clone();
            gram[b][a] = b_uv;
        }
    }

    if leading_minors(&gram).iter().all(|m| m.sign() == Sign::Positive) {
        return Ok(EvenPartType::H { pure_basis: pure, gram });
    }
    Err(ClassifyError::NotDivision(indefinite_witness(alg, &pure, &gram)))
}

/// Leading principal minors of a square matrix.
pub(crate) fn leading_minors(m: &[Vec<Rational>]) -> Vec<Rational> {
    (1..=m.len())
        .map(|k| {
            let sub = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            Matrix::from_rows(sub).expect("square").determinant()
        })
        .collect()
}

/// Gram–Schmidt on the pure part until a vector with `B(w,w) ≤ 0` turns up.
/// Such `w` has `w² = -B(w,w)·1 ≥ 0`.
fn indefinite_witness(alg: &SuperAlgebra<Rational>, pure: &[Vec<Rational>], gram: &[Vec<Rational>]) -> DivisionWitness {
    let form = |x: &[Rational], y: &[Rational]| -> Rational {
        let mut acc = Rational::zero();
        for a in 0..3 {
            for b in 0..3 {
                acc.add_assign(&x[a].mul(&gram[a][b]).mul(&y[b]));
            }
        }
        acc
    };
    // Work in pure-part coordinates.
    let mut done: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for k in 0..3 {
        let mut w = vec![Rational::zero(); 3];
        w[k] = Rational::one();
        for (prev, norm) in &done {
            let c = form(&w, prev).div(norm).expect("earlier norms are positive");
            w = linalg::sub_vec(&w, &linalg::scale_vec(&c, prev));
        }
        let norm = form(&w, &w);
        if norm.sign() != Sign::Positive {
            let element = (0..3).fold(alg.zero_vector(), |acc, a| {
                linalg::add_vec(&acc, &linalg::scale_vec(&w[a], &pure[a]))
            });
            let square = norm.neg();
            return match square.sqrt_exact() {
                Some(s) => DivisionWitness::ZeroDivisor {
                    element: linalg::sub_vec(&element, &linalg::scale_vec(&s, alg.unit())),
                },
                None => DivisionWitness::SplitSquare { element, square },
            };
        }
        done.push((w, norm));
    }
    unreachable!("called only when some leading minor is nonpositive")
}

/// Looks for a non-invertible element among basis elements and their
/// pairwise sums and differences.
pub(crate) fn find_zero_divisor(alg: &SuperAlgebra<Rational>) -> Option<DivisionWitness> {
    let n = alg.dim();
    let singles = (0..n).map(|i| alg.basis_vector(i));
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).flat_map(|(i, j)| {
        let (bi, bj) = (alg.basis_vector(i), alg.basis_vector(j));
        [linalg::add_vec(&bi, &bj), linalg::sub_vec(&bi, &bj)]
    });
    singles
        .chain(pairs)
        .find(|x| alg.parity_tag(x).is_homogeneous() && !alg.is_invertible(x))
        .map(|element| DivisionWitness::ZeroDivisor { element })
}
