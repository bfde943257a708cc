//! Real and complex Clifford algebras, matrix superalgebras and Brauer–Wall
//! classes.
//!
//! `Cl(p,q)` has anticommuting odd generators `e_1..e_{p+q}` with `e_i² = +1`
//! for `i ≤ p` and `e_i² = -1` otherwise. Its basis is the monomials `e_S`
//! for subsets `S`, ordered by size and then lexicographically.

mod periodicity;

pub use periodicity::{
    class4_certificate, clifford11_matrix_certificate, morita_table, reduce, verify_generator_map,
    verify_periodicity, GeneratorMap, MapCertificate, MoritaEntry, Reduction,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::divclass::{self, ClassificationReport, ClassifyError};
use crate::scalar::{GaussianRational, Rational, Scalar};
use crate::superalg::{validation_for, Parity, SuperAlgebra};

/// Largest number of generators accepted.
pub const MAX_GENERATORS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("signature ({p},{q}) exceeds the cap p + q ≤ {MAX_GENERATORS}")]
    SignatureTooLarge { p: usize, q: usize },
    #[error("matrix superalgebra of size ({r}|{s}) is empty or exceeds dimension 256")]
    SizeTooLarge { r: usize, s: usize },
    #[error("image {index} is not odd")]
    ImageNotOdd { index: usize },
    #[error("relation fails: {0}")]
    RelationFailure(String),
    #[error("images span only {rank} of {expected} dimensions")]
    SpanDeficient { rank: usize, expected: usize },
    #[error(transparent)]
    Algebra(#[from] crate::superalg::AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CliffordSignature {
    p: usize,
    q: usize,
}

impl CliffordSignature {
    pub fn new(p: usize, q: usize) -> Result<Self, CliffordError> {
        if p + q > MAX_GENERATORS {
            return Err(CliffordError::SignatureTooLarge { p, q });
        }
        Ok(CliffordSignature { p, q })
    }

    pub fn p(self) -> usize {
        self.p
    }

    pub fn q(self) -> usize {
        self.q
    }

    pub fn generators(self) -> usize {
        self.p + self.q
    }

    /// `e_i²` for each generator.
    pub fn squares(self) -> Vec<Rational> {
        (0..self.generators())
            .map(|i| if i < self.p { Rational::one() } else { Rational::one().neg() })
            .collect()
    }
}

impl std::fmt::Display for CliffordSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

/// Subsets of `0..n` (as sorted index lists) ordered by size, then
/// lexicographically.
pub fn monomial_order(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        let next: Vec<Vec<usize>> = layer
            .iter()
            .flat_map(|s| {
                let start = s.last().map_or(0, |&l| l + 1);
                (start..n).map(move |i| {
                    let mut t = s.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Product of two sorted monomials: the sign from sorting the concatenated
/// word by adjacent transpositions, times the squares of repeated indices.
pub fn monomial_product<F: Scalar>(a: &[usize], b: &[usize], squares: &[F]) -> (F, Vec<usize>) {
    let mut word: Vec<usize> = a.iter().chain(b).copied().collect();
    let mut swaps = 0usize;
    for i in 1..word.len() {
        let mut j = i;
        while j > 0 && word[j - 1] > word[j] {
            word.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    let mut coeff = if swaps.is_multiple_of(2) { F::one() } else { F::one().neg() };
    let mut reduced = Vec::with_capacity(word.len());
    let mut i = 0;
    while i < word.len() {
        if i + 1 < word.len() && word[i] == word[i + 1] {
            coeff = coeff.mul(&squares[word[i]]);
            i += 2;
        } else {
            reduced.push(word[i]);
            i += 1;
        }
    }
    (coeff, reduced)
}

fn clifford_with_squares<F: Scalar>(squares: &[F]) -> SuperAlgebra<F> {
    let n = squares.len();
    let basis = monomial_order(n);
    let dim = basis.len();
    let index: std::collections::HashMap<&[usize], usize> =
        basis.iter().enumerate().map(|(k, s)| (s.as_slice(), k)).collect();
    let products = basis
        .iter()
        .flat_map(|a| basis.iter().map(move |b| (a, b)))
        .map(|(a, b)| {
            let (c, m) = monomial_product(a, b, squares);
            vec![(index[m.as_slice()], c)]
        })
        .collect();
    let parity = basis
        .iter()
        .map(|s| if s.len() % 2 == 0 { Parity::Even } else { Parity::Odd })
        .collect();
    let mut unit = vec![F::zero(); dim];
    unit[0] = F::one();
    let names = basis
        .iter()
        .map(|s| {
            if s.is_empty() {
                "1".to_string()
            } else {
                s.iter().map(|i| format!("e{}", i + 1)).collect()
            }
        })
        .collect();
    SuperAlgebra::from_sparse(parity, products, unit, validation_for(dim))
        .expect("Clifford tables are valid superalgebras")
        .with_names(names)
}

/// The real Clifford algebra `Cl(p,q)`.
pub fn clifford_real(sig: CliffordSignature) -> SuperAlgebra<Rational> {
    clifford_with_squares(&sig.squares())
}

/// The complex Clifford algebra on `n` generators squaring to `+1`.
pub fn clifford_complex(n: usize) -> Result<SuperAlgebra<GaussianRational>, CliffordError> {
    if n > MAX_GENERATORS {
        return Err(CliffordError::SignatureTooLarge { p: n, q: 0 });
    }
    Ok(clifford_with_squares(&vec![GaussianRational::one(); n]))
}

/// Endomorphisms of the super vector space with `r` even and `s` odd
/// coordinates, on the matrix units `E_{ab}` in row-major order.
pub fn end_superalgebra(r: usize, s: usize) -> Result<SuperAlgebra<Rational>, CliffordError> {
    let n = r + s;
    if n == 0 || n * n > 256 {
        return Err(CliffordError::SizeTooLarge { r, s });
    }
    let dim = n * n;
    let idx = |a: usize, b: usize| a * n + b;
    let coord_parity = |a: usize| if a < r { Parity::Even } else { Parity::Odd };
    let mut products = vec![Vec::new(); dim * dim];
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                products[idx(a, b) * dim + idx(b, d)].push((idx(a, d), Rational::one()));
            }
        }
    }
    let mut parity = Vec::with_capacity(dim);
    let mut names = Vec::with_capacity(dim);
    for a in 0..n {
        for b in 0..n {
            parity.push(coord_parity(a).add(coord_parity(b)));
            names.push(format!("E{}{}", a + 1, b + 1));
        }
    }
    let mut unit = vec![Rational::zero(); dim];
    for a in 0..n {
        unit[idx(a, a)] = Rational::one();
    }
    Ok(SuperAlgebra::from_sparse(parity, products, unit, validation_for(dim))?.with_names(names))
}

/// A class in the Brauer–Wall group: `Z/8` for real, `Z/2` for complex
/// Clifford algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BrauerWallClass {
    pub modulus: u8,
    pub value: u8,
}

/// `(p - q) mod 8`.
pub fn brauer_wall(sig: CliffordSignature) -> BrauerWallClass {
    let v = (sig.p as i64 - sig.q as i64).rem_euclid(8);
    BrauerWallClass { modulus: 8, value: v as u8 }
}

/// `n mod 2`.
pub fn brauer_wall_complex(n: usize) -> BrauerWallClass {
    BrauerWallClass {
        modulus: 2,
        value: (n % 2) as u8,
    }
}

/// Classifies `Cl(p,q)` as a real superalgebra.
pub fn classify_clifford(sig: CliffordSignature) -> Result<ClassificationReport, ClassifyError> {
    divclass::classify(&clifford_real(sig))
}
