mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use tenfold_core::clifford::{brauer_wall, classify_clifford, clifford_real, reduce, CliffordSignature};
use tenfold_core::divclass::{
    canonical, classify, is_super_division, recognize_even_division, ClassifyError, DivisionWitness, TenfoldClass,
};
use tenfold_core::linalg::{add_vec, neg_vec, scale_vec, sub_vec, Matrix};
use tenfold_core::repthree::{commutant, complexify, fixtures, fs_indicator, schur_type, SchurType};
use tenfold_core::scalar::{q, r, GaussianRational, Rational, Scalar};
use tenfold_core::superalg::{graded_tensor, AnyAlgebra, SuperAlgebra};

fn sig(p: usize, q: usize) -> CliffordSignature {
    CliffordSignature::new(p, q).unwrap()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| q(n, d))
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rational(), n)
}

fn canonical_label() -> impl Strategy<Value = TenfoldClass> {
    proptest::sample::select(TenfoldClass::ALL.to_vec())
}

/// Even subalgebras fed to the recognizer: all ten canonical ones, some
/// Clifford even parts, and a few that are not division algebras.
fn even_parts() -> Vec<(String, SuperAlgebra<Rational>)> {
    let mut out: Vec<_> = TenfoldClass::ALL
        .iter()
        .map(|&l| (l.to_string(), canonical(l).even_subalgebra().0))
        .collect();
    for (p, q_) in [(1, 1), (2, 0), (0, 2), (3, 0), (0, 3), (2, 1), (1, 2), (2, 2), (0, 4), (4, 0)] {
        out.push((format!("Cl({p},{q_})₀"), clifford_real(sig(p, q_)).even_subalgebra().0));
    }
    out
}

#[test]
fn recognizer_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, alg) in even_parts() {
        let all: Vec<usize> = (0..alg.dim()).collect();
        match recognize_even_division(&alg) {
            Ok(ty) => {
                assert!(ty.verify(&alg), "{name}: witness does not verify");
                for _ in 0..1000 {
                    let x = random_supported(&mut rng, alg.dim(), &all);
                    assert!(alg.is_invertible(&x), "{name}: {} not invertible", alg.format_coords(&x));
                }
            }
            Err(ClassifyError::NotDivision(w)) => {
                assert!(w.verify(&alg), "{name}: witness does not verify");
                if let Some(x) = w.element() {
                    assert!(x.iter().any(|c| !c.is_zero()));
                    if matches!(w, DivisionWitness::ZeroDivisor { .. }) {
                        assert!(!alg_invertible_by_oracle(&alg, x), "{name}: witness is invertible");
                    }
                }
            }
            Err(e) => panic!("{name}: unexpected {e}"),
        }
    }
}

#[test]
fn odd_propagation() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut algebras: Vec<SuperAlgebra<Rational>> = TenfoldClass::ALL.iter().map(|&l| canonical(l)).collect();
    for (p, q_) in [(1, 0), (0, 1), (2, 0), (0, 2), (3, 0), (0, 3), (1, 1), (2, 2)] {
        algebras.push(clifford_real(sig(p, q_)));
    }
    for alg in algebras {
        let odd = alg.odd_indices();
        if odd.is_empty() {
            continue;
        }
        match is_super_division(&alg) {
            Ok(_) => {
                assert_eq!(odd.len(), alg.even_indices().len());
                for _ in 0..1000 {
                    let x = random_supported(&mut rng, alg.dim(), &odd);
                    assert!(alg.is_invertible(&x));
                }
            }
            Err(e) => assert!(e.witness().unwrap().verify(&alg)),
        }
    }
}

#[test]
fn clifford_generator_relations() {
    for total in 0..=6usize {
        for p in 0..=total {
            let q_ = total - p;
            let alg = clifford_real(sig(p, q_));
            assert_eq!(alg.dim(), 1 << total);
            if total > 0 {
                assert_eq!(alg.even_indices().len(), 1 << (total - 1));
                assert_eq!(alg.odd_indices().len(), 1 << (total - 1));
            }
            let gens: Vec<Vec<Rational>> = (1..=total).map(|i| alg.basis_vector(i)).collect();
            for (i, x) in gens.iter().enumerate() {
                let sq = if i < p { r(1) } else { r(-1) };
                assert_eq!(alg.mul_coords(x, x), scale_vec(&sq, alg.unit()));
                for y in &gens[i + 1..] {
                    assert_eq!(alg.mul_coords(x, y), neg_vec(&alg.mul_coords(y, x)));
                }
            }
        }
    }
}

/// The label a signature's full (1,1)-reduction classifies to, when the
/// reduced algebra is itself a super division algebra.
fn reduced_label(p: usize, q_: usize) -> Option<TenfoldClass> {
    let end = reduce(sig(p, q_)).unwrap().end;
    classify_clifford(end).ok().map(|r| r.class)
}

#[test]
fn brauer_wall_matches_reductions() {
    let sigs: Vec<(usize, usize)> = (0..=4usize).flat_map(|t| (0..=t).map(move |p| (p, t - p))).collect();
    let labels: Vec<_> = sigs.iter().map(|&(p, q_)| reduced_label(p, q_)).collect();
    for (a, &(p, q_)) in sigs.iter().enumerate() {
        for (b, &(p2, q2)) in sigs.iter().enumerate() {
            if let (Some(la), Some(lb)) = (labels[a], labels[b]) {
                let same_class = brauer_wall(sig(p, q_)) == brauer_wall(sig(p2, q2));
                assert_eq!(la == lb, same_class, "({p},{q_}) vs ({p2},{q2})");
            }
        }
    }
}

#[test]
fn schur_types_have_invertible_commutants() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for rep in [
        fixtures::cyclic4_rotation(),
        fixtures::quaternion_left_regular(),
        fixtures::symmetric3_standard(),
        fixtures::trivial_real(1),
    ] {
        let ty = schur_type(&rep);
        assert_ne!(ty, SchurType::Reducible);
        let c = commutant(&rep);
        let all: Vec<usize> = (0..c.dimension).collect();
        for _ in 0..1000 {
            let coeffs = random_supported(&mut rng, c.dimension, &all);
            let mut m = Matrix::zeros(rep.degree(), rep.degree());
            for (a, b) in coeffs.iter().zip(&c.basis) {
                m = m.add_mat(&b.scale(a));
            }
            assert!(m.is_invertible());
        }
    }
}

#[test]
fn threefold_cross_law() {
    let pairs = [
        (schur_type(&fixtures::cyclic4_rotation()), fs_indicator(&fixtures::cyclic4_complex())),
        (schur_type(&fixtures::quaternion_left_regular()), fs_indicator(&fixtures::quaternion_complex())),
        (
            schur_type(&fixtures::symmetric3_standard()),
            fs_indicator(&complexify(&fixtures::symmetric3_standard())),
        ),
    ];
    for (ty, fs) in pairs {
        let expected = match ty {
            SchurType::Real => 1,
            SchurType::Complex => 0,
            SchurType::Quaternionic => -1,
            SchurType::Reducible => panic!("fixture is irreducible"),
        };
        assert_eq!(fs, Ok(expected));
    }
}

fn random_complex_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<GaussianRational> {
    use rand::Rng;
    loop {
        let data = (0..n * n)
            .map(|_| GaussianRational::from_ints(rng.gen_range(-3..=3), rng.gen_range(-3..=3)))
            .collect();
        let m = Matrix::from_vec(n, n, data).unwrap();
        if m.is_invertible() {
            return m;
        }
    }
}

#[test]
fn fs_invariant_under_conjugation() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let reps = [
        fixtures::quaternion_complex(),
        fixtures::cyclic4_complex(),
        complexify(&fixtures::symmetric3_standard()),
    ];
    for rep in reps {
        let base = fs_indicator(&rep);
        for _ in 0..10 {
            let p = random_complex_invertible(&mut rng, rep.degree());
            let moved = rep.conjugate(&p).unwrap();
            assert_eq!(moved.order(), rep.order());
            assert_eq!(fs_indicator(&moved), base);
        }
    }
}

#[test]
fn canonical_json_round_trip_is_byte_identical() {
    for label in TenfoldClass::ALL {
        let text = canonical(label).to_json();
        let back = AnyAlgebra::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
    }
    let text = tenfold_core::clifford::clifford_complex(2).unwrap().to_json();
    assert_eq!(AnyAlgebra::from_json(&text).unwrap().to_json(), text);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_bilinear(label in canonical_label(), seed in any::<u64>(), alpha in rational()) {
        let alg = canonical(label);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = alg.dim();
        let (a, a2, b) = (random_vector(&mut rng, n), random_vector(&mut rng, n), random_vector(&mut rng, n));
        let lhs = alg.mul_coords(&add_vec(&scale_vec(&alpha, &a), &a2), &b);
        let rhs = add_vec(&scale_vec(&alpha, &alg.mul_coords(&a, &b)), &alg.mul_coords(&a2, &b));
        prop_assert_eq!(lhs, rhs);
        let lhs = alg.mul_coords(&b, &add_vec(&scale_vec(&alpha, &a), &a2));
        let rhs = add_vec(&scale_vec(&alpha, &alg.mul_coords(&b, &a)), &alg.mul_coords(&b, &a2));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_dims_and_parity(a in canonical_label(), b in canonical_label()) {
        let (x, y) = (canonical(a), canonical(b));
        let t = graded_tensor(&x, &y).unwrap();
        prop_assert_eq!(t.dim(), x.dim() * y.dim());
        for i in 0..x.dim() {
            for j in 0..y.dim() {
                prop_assert_eq!(t.parity()[i * y.dim() + j], x.parity()[i].add(y.parity()[j]));
            }
        }
        prop_assert!(t.validate().is_ok());
    }

    #[test]
    fn tensor_is_associative(a in canonical_label(), b in canonical_label(), c in proptest::sample::select(vec![TenfoldClass::R, TenfoldClass::C, TenfoldClass::RPlus, TenfoldClass::RMinus])) {
        let (x, y, z) = (canonical(a), canonical(b), canonical(c));
        let left = graded_tensor(&graded_tensor(&x, &y).unwrap(), &z).unwrap();
        let right = graded_tensor(&x, &graded_tensor(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left.table(), right.table());
        prop_assert_eq!(left.unit(), right.unit());
    }

    #[test]
    fn inverses_are_two_sided(p in 0usize..=3, q_ in 0usize..=2, coords in vector(32)) {
        let alg = clifford_real(sig(p, q_));
        let x = &coords[..alg.dim()];
        match alg.invert_coords(x) {
            Ok(y) => {
                prop_assert_eq!(alg.mul_coords(x, &y), alg.unit().to_vec());
                prop_assert_eq!(alg.mul_coords(&y, x), alg.unit().to_vec());
            }
            Err(_) => prop_assert!(!alg_invertible_by_oracle(&alg, x)),
        }
    }

    #[test]
    fn classification_survives_graded_basis_change(label in canonical_label(), seed in any::<u64>()) {
        let alg = canonical(label);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_graded_change(&mut rng, alg.parity());
        let moved = alg.change_basis(&p).unwrap();
        prop_assert_eq!(classify(&moved).unwrap().class, label);
    }

    #[test]
    fn unit_is_neutral(label in canonical_label(), seed in any::<u64>()) {
        let alg = canonical(label);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_vector(&mut rng, alg.dim());
        prop_assert_eq!(alg.mul_coords(alg.unit(), &x), x.clone());
        prop_assert_eq!(alg.mul_coords(&x, alg.unit()), x.clone());
        prop_assert!(sub_vec(&x, &x).iter().all(Scalar::is_zero));
    }

    #[test]
    fn scalar_json_round_trip(n in -1000i64..1000, d in 1i64..1000, m in -1000i64..1000) {
        let x = q(n, d);
        let text = serde_json::to_string(&x).unwrap();
        let back: Rational = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        let z = GaussianRational::new(q(n, d), r(m));
        let text = serde_json::to_string(&z).unwrap();
        let back: GaussianRational = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, z);
    }
}
