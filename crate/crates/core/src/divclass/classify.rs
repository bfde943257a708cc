use super::even::recognize_even_division;
use super::{
    embed_coords, ClassificationReport, ClassifyError, Commutation, DivisionWitness, EvenPartType, InvariantTuple,
    SquareSign, TenfoldClass,
};
use crate::linalg::{self, is_zero_vec, Matrix};
use crate::scalar::{Rational, Scalar};
use crate::superalg::SuperAlgebra;

/// Evidence that an algebra is a super division algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperDivisionCertificate {
    /// Even-part witness in ambient coordinates.
    pub even: EvenPartType,
    /// First odd basis element and its inverse, when the odd part is nonzero.
    pub odd_generator: Option<(usize, Vec<Rational>)>,
    pub notes: Vec<String>,
}

/// Decides the super division property.
///
/// It suffices to test the even part and the first odd basis element `e`:
/// if `e` is invertible then `A₁ = A₀·e`, so every nonzero odd element is a
/// product of invertibles; if `e` is not invertible then no odd element is,
/// since one invertible odd element would make all nonzero ones invertible.
pub fn is_super_division(alg: &SuperAlgebra<Rational>) -> Result<SuperDivisionCertificate, ClassifyError> {
    let n = alg.dim();
    let (even_alg, even_idx) = alg.even_subalgebra();
    let odd_idx = alg.odd_indices();
    let mut notes = vec![format!(
        "dim A₀ = {}, dim A₁ = {}",
        even_idx.len(),
        odd_idx.len()
    )];

    let first_odd = odd_idx.first().map(|&k| (k, alg.invert_coords(&alg.basis_vector(k))));

    let even = match recognize_even_division(&even_alg) {
        Ok(ty) => ty.embed(&even_idx, n),
        Err(ClassifyError::NotDivision(w)) => {
            let w = w.embed(&even_idx, n);
            let witness = match (&w, &first_odd) {
                (DivisionWitness::ZeroDivisor { element }, Some((k, Ok(_)))) => {
                    prefer_square_zero(alg, element.clone(), &alg.basis_vector(*k))
                }
                _ => w,
            };
            return Err(ClassifyError::NotSuperDivision(witness));
        }
        Err(other) => return Err(other),
    };
    notes.push(format!("A₀ is a division algebra of type {:?}", even.label()));

    let odd_generator = match first_odd {
        None => None,
        Some((k, Err(_))) => {
            return Err(ClassifyError::NotSuperDivision(DivisionWitness::ZeroDivisor {
                element: alg.basis_vector(k),
            }))
        }
        Some((k, Ok(inv))) => {
            if odd_idx.len() != even_idx.len() {
                return Err(ClassifyError::InternalContradiction(format!(
                    "invertible odd element but dim A₁ = {} ≠ dim A₀ = {}",
                    odd_idx.len(),
                    even_idx.len()
                )));
            }
            notes.push(format!(
                "first odd basis element {} is invertible, so left multiplication by it maps A₀ onto A₁ \
                 and every nonzero odd element is invertible",
                alg.names()[k]
            ));
            Some((k, inv))
        }
    };
    Ok(SuperDivisionCertificate {
        even,
        odd_generator,
        notes,
    })
}

/// Among `w`, `e·w`, `w·e` (all non-invertible when `e` is invertible),
/// returns the first that squares to zero, falling back to `w`.
fn prefer_square_zero(alg: &SuperAlgebra<Rational>, w: Vec<Rational>, e: &[Rational]) -> DivisionWitness {
    let candidates = [alg.mul_coords(e, &w), alg.mul_coords(&w, e)];
    let square_zero = |x: &Vec<Rational>| is_zero_vec(&alg.mul_coords(x, x));
    let element = if square_zero(&w) {
        w
    } else {
        candidates.into_iter().find(square_zero).unwrap_or(w)
    };
    DivisionWitness::ZeroDivisor { element }
}

/// Runs the classification argument for real super division algebras.
pub fn classify(alg: &SuperAlgebra<Rational>) -> Result<ClassificationReport, ClassifyError> {
    let cert = is_super_division(alg)?;
    let mut trace = cert.notes.clone();
    let even_dim = alg.even_indices().len();
    let odd_dim = alg.odd_indices().len();

    let Some((k, e_inv)) = cert.odd_generator.clone() else {
        trace.push("A₁ = 0: purely even super division algebra".into());
        let class = match cert.even.label() {
            super::EvenType::R => TenfoldClass::R,
            super::EvenType::C => TenfoldClass::C,
            super::EvenType::H => TenfoldClass::H,
        };
        return Ok(ClassificationReport {
            class,
            even_dim,
            odd_dim,
            chosen_e: None,
            recentered_e: None,
            e_square: None,
            even_witness: cert.even,
            trace,
        });
    };

    let e = alg.basis_vector(k);
    let e_sq = alg.mul_coords(&e, &e);
    let mut report = ClassificationReport {
        class: TenfoldClass::R,
        even_dim,
        odd_dim,
        chosen_e: Some(e.clone()),
        recentered_e: None,
        e_square: None,
        even_witness: cert.even.clone(),
        trace: Vec::new(),
    };

    match &cert.even {
        EvenPartType::R => {
            let lambda = scalar_square(alg, &e_sq, "e² must lie in A₀ = R")?;
            trace.push(format!(
                "A₀ = R: e = {}, e² = {lambda}·1; rescaling e by a real number gives e² = {}",
                alg.names()[k],
                sign_str(&lambda)
            ));
            report.class = pick(&lambda, TenfoldClass::RPlus, TenfoldClass::RMinus);
            report.e_square = Some(lambda);
        }
        EvenPartType::C { u, d } => {
            let conj = alg.mul_coords(&alg.mul_coords(&e, u), &e_inv);
            trace.push(format!("A₀ = C with u = {}, u² = -{d}·1", alg.format_coords(u)));
            if conj == *u {
                trace.push(
                    "e u e⁻¹ = u: conjugation by e is the identity on A₀, so e is C-linear and \
                     rescaling over C gives e² = 1"
                        .into(),
                );
                report.class = TenfoldClass::CComm;
            } else if conj == linalg::neg_vec(u) {
                let lambda = scalar_square(alg, &e_sq, "e² commutes with e and is forced real")?;
                trace.push(format!(
                    "e u e⁻¹ = -u: conjugation by e is complex conjugation; e² = {lambda}·1 is real, \
                     rescaling gives e² = {}",
                    sign_str(&lambda)
                ));
                report.class = pick(&lambda, TenfoldClass::CAntiPlus, TenfoldClass::CAntiMinus);
                report.e_square = Some(lambda);
            } else {
                return Err(ClassifyError::InternalContradiction(format!(
                    "e u e⁻¹ = {} is neither u nor -u",
                    alg.format_coords(&conj)
                )));
            }
        }
        EvenPartType::H { .. } => {
            let y = recenter(alg)?;
            let y_sq = alg.mul_coords(&y, &y);
            let lambda = scalar_square(alg, &y_sq, "y commutes with A₀, hence y² is real")?;
            trace.push(format!(
                "A₀ = H: conjugation by e is inner; solved for an odd y commuting with all of A₀: y = {}",
                alg.format_coords(&y)
            ));
            trace.push(format!(
                "y² = {lambda}·1 is real; rescaling gives y² = {}",
                sign_str(&lambda)
            ));
            report.class = pick(&lambda, TenfoldClass::HPlus, TenfoldClass::HMinus);
            report.recentered_e = Some(y);
            report.e_square = Some(lambda);
        }
    }
    trace.push(format!("class {}", report.class));
    report.trace = trace;
    Ok(report)
}

/// First odd element (in canonical nullspace order) commuting with every
/// even basis element.
fn recenter(alg: &SuperAlgebra<Rational>) -> Result<Vec<Rational>, ClassifyError> {
    let n = alg.dim();
    let odd = alg.odd_indices();
    let blocks: Vec<Matrix<Rational>> = alg
        .even_indices()
        .into_iter()
        .map(|a| {
            let basis_a = alg.basis_vector(a);
            let cols: Vec<Vec<Rational>> = odd
                .iter()
                .map(|&o| {
                    let bo = alg.basis_vector(o);
                    linalg::sub_vec(&alg.mul_coords(&basis_a, &bo), &alg.mul_coords(&bo, &basis_a))
                })
                .collect();
            Matrix::from_columns(&cols).expect("consistent shape")
        })
        .collect();
    let system = Matrix::vstack(&blocks).expect("same column count");
    let y = system
        .nullspace()
        .into_iter()
        .next()
        .ok_or_else(|| ClassifyError::InternalContradiction("no odd element commutes with A₀ = H".into()))?;
    Ok(embed_coords(&y, &odd, n))
}

fn scalar_square(alg: &SuperAlgebra<Rational>, sq: &[Rational], why: &str) -> Result<Rational, ClassifyError> {
    match alg.unit_multiple(sq) {
        Some(l) if !l.is_zero() => Ok(l),
        _ => Err(ClassifyError::InternalContradiction(format!(
            "{why}, but the square is {}",
            alg.format_coords(sq)
        ))),
    }
}

fn pick(lambda: &Rational, plus: TenfoldClass, minus: TenfoldClass) -> TenfoldClass {
    if lambda.sign() == crate::scalar::Sign::Positive {
        plus
    } else {
        minus
    }
}

fn sign_str(lambda: &Rational) -> &'static str {
    if lambda.sign() == crate::scalar::Sign::Positive {
        "+1"
    } else {
        "-1"
    }
}

/// `(dim A₀, has odd part, commutation, sign of e²)` read off a report.
pub fn invariant_tuple(report: &ClassificationReport) -> InvariantTuple {
    let e_square = match (&report.e_square, report.class.e_square()) {
        (Some(l), _) => SquareSign::of(l.sign()).unwrap_or(SquareSign::NotApplicable),
        (None, s) => s,
    };
    let commutation = if report.chosen_e.is_some() {
        report.class.commutation()
    } else {
        Commutation::NotApplicable
    };
    InvariantTuple {
        even_dim: report.even_dim,
        has_odd: report.chosen_e.is_some(),
        commutation,
        e_square,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divclass::canonical;
    use crate::scalar::r;

    #[test]
    fn every_canonical_algebra_round_trips() {
        for label in TenfoldClass::ALL {
            let report = classify(&canonical(label)).unwrap();
            assert_eq!(report.class, label, "trace: {:?}", report.trace);
            assert!(report.even_witness.verify(&canonical(label)));
        }
    }

    #[test]
    fn invariant_tuples_are_distinct() {
        let tuples: Vec<InvariantTuple> = TenfoldClass::ALL
            .iter()
            .map(|&l| invariant_tuple(&classify(&canonical(l)).unwrap()))
            .collect();
        for a in 0..tuples.len() {
            for b in a + 1..tuples.len() {
                assert_ne!(tuples[a], tuples[b]);
            }
        }
        let h = invariant_tuple(&classify(&canonical(TenfoldClass::H)).unwrap());
        assert_eq!(
            h,
            InvariantTuple {
                even_dim: 4,
                has_odd: false,
                commutation: Commutation::NotApplicable,
                e_square: SquareSign::NotApplicable
            }
        );
        let rp = invariant_tuple(&classify(&canonical(TenfoldClass::RPlus)).unwrap());
        assert_eq!(
            rp,
            InvariantTuple {
                even_dim: 1,
                has_odd: true,
                commutation: Commutation::NotApplicable,
                e_square: SquareSign::Plus
            }
        );
    }

    #[test]
    fn h_minus_recenters_onto_commuting_odd_element() {
        let alg = canonical(TenfoldClass::HMinus);
        let report = classify(&alg).unwrap();
        let y = report.recentered_e.unwrap();
        for a in alg.even_indices() {
            let b = alg.basis_vector(a);
            assert_eq!(alg.mul_coords(&y, &b), alg.mul_coords(&b, &y));
        }
        assert_eq!(report.e_square, Some(r(-1)));
    }
}
