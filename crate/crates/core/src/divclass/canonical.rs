use super::{EvenType, TenfoldClass};
use crate::linalg::Matrix;
use crate::scalar::{r, Rational, Scalar};
use crate::superalg::{Parity, SuperAlgebra};

/// Explicit structure constants for each of the ten super division algebras.
///
/// Odd classes are built as `A₀ ⊕ A₀·e` from the even algebra `A₀`, an
/// automorphism `σ` with `e a = σ(a) e` and the real scalar `s = e²`.
pub fn canonical(label: TenfoldClass) -> SuperAlgebra<Rational> {
    let even = division_algebra(label.even_type());
    if !label.has_odd() {
        return even;
    }
    let m = even.dim();
    let identity = Matrix::<Rational>::identity(m);
    let (sigma, s) = match label {
        TenfoldClass::RPlus | TenfoldClass::CComm | TenfoldClass::HPlus => (identity, r(1)),
        TenfoldClass::RMinus | TenfoldClass::HMinus => (identity, r(-1)),
        TenfoldClass::CAntiPlus => (conjugation(), r(1)),
        TenfoldClass::CAntiMinus => (conjugation(), r(-1)),
        TenfoldClass::R | TenfoldClass::C | TenfoldClass::H => unreachable!("purely even"),
    };
    adjoin_odd(&even, &sigma, &s)
}

fn conjugation() -> Matrix<Rational> {
    let mut m = Matrix::identity(2);
    m[(1, 1)] = r(-1);
    m
}

/// `R`, `C` or `H` as a purely even algebra on the basis `1`, `1,i` or
/// `1,i,j,k`.
pub(crate) fn division_algebra(ty: EvenType) -> SuperAlgebra<Rational> {
    let n = ty.dim();
    // Basis index and sign of the product of two basis units.
    let prod = |a: usize, b: usize| -> (usize, i64) {
        match (a, b) {
            (0, x) | (x, 0) => (x, 1),
            (x, y) if x == y => (0, -1),
            // ij = k, jk = i, ki = j and their reverses
            (x, y) => {
                let third = 6 - x - y;
                let cyclic = matches!((x, y), (1, 2) | (2, 3) | (3, 1));
                (third, if cyclic { 1 } else { -1 })
            }
        }
    };
    let mul = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let (k, s) = prod(a, b);
                    let mut v = vec![Rational::zero(); n];
                    v[k] = r(s);
                    v
                })
                .collect()
        })
        .collect();
    let mut unit = vec![Rational::zero(); n];
    unit[0] = r(1);
    let names = ["1", "i", "j", "k"][..n].iter().map(|s| s.to_string()).collect();
    SuperAlgebra::new(vec![Parity::Even; n], mul, unit)
        .expect("division algebra tables are valid")
        .with_names(names)
}

fn adjoin_odd(even: &SuperAlgebra<Rational>, sigma: &Matrix<Rational>, s: &Rational) -> SuperAlgebra<Rational> {
    let m = even.dim();
    let n = 2 * m;
    let mut mul = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..m {
        for j in 0..m {
            let bj = even.basis_vector(j);
            let plain = even.mul_coords(&even.basis_vector(i), &bj);
            let twisted = even.mul_coords(&even.basis_vector(i), &sigma.mul_vec(&bj));
            for k in 0..m {
                // a_i a_j, a_i (a_j e), (a_i e) a_j = a_i σ(a_j) e, (a_i e)(a_j e) = s a_i σ(a_j)
                mul[i][j][k] = plain[k].clone();
                mul[i][m + j][m + k] = plain[k].clone();
                mul[m + i][j][m + k] = twisted[k].clone();
                mul[m + i][m + j][k] = s.mul(&twisted[k]);
            }
        }
    }
    let mut unit = even.unit().to_vec();
    unit.resize(n, Rational::zero());
    let parity = [vec![Parity::Even; m], vec![Parity::Odd; m]].concat();
    let names = even
        .names()
        .iter()
        .cloned()
        .chain(even.names().iter().map(|a| if a == "1" { "e".to_string() } else { format!("{a}e") }))
        .collect();
    SuperAlgebra::new(parity, mul, unit)
        .expect("crossed construction of a super division algebra is valid")
        .with_names(names)
}
