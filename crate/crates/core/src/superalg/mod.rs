//! Superalgebras presented by graded structure constants.
//!
//! A [`SuperAlgebra`] is a finite-dimensional associative unital algebra with
//! a basis `b_0..b_{n-1}`, each basis element carrying a parity in `Z/2`, and
//! products `b_i b_j = Σ_k c_{ij}^k b_k` that respect the grading.

mod element;
mod json;
mod tensor;

pub use element::{Element, ParityTag};
pub use json::{AnyAlgebra, FormatError};
pub use tensor::{graded_tensor, VALIDATION_LIMIT};
pub(crate) use tensor::validation_for;

use thiserror::Error;

use crate::linalg::{self, LinearOperator, Matrix};
use crate::scalar::{FieldTag, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Option<Parity> {
        match bit {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("inconsistent dimensions: {0}")]
    Shape(String),
    #[error("grading violated: b_{i} b_{j} has a component along b_{k} of the wrong parity")]
    GradingViolation { i: usize, j: usize, k: usize },
    #[error("associativity fails on basis triple ({i}, {j}, {k})")]
    NonAssociative { i: usize, j: usize, k: usize },
    #[error("unit is not a two-sided even identity (fails against basis element {0:?})")]
    BadUnit(Option<usize>),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("operands are defined over different fields")]
    FieldMismatch,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("change of basis is singular or mixes parities")]
    BadBasisChange,
}

/// How much checking [`SuperAlgebra::with_validation`] performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validation {
    /// Check grading, associativity and unit law over all basis tuples.
    Full,
    /// Skip the checks. Only for tables generated by this crate; the test
    /// suite revalidates them.
    Trusted,
}

/// Product `b_i b_j` as its nonzero coordinates, in increasing index order.
pub type SparseProduct<F> = Vec<(usize, F)>;

/// Structure constants are held sparsely, indexed by `i·dim + j`; the
/// dense `dim³` table is only materialised on request.
#[derive(Clone)]
pub struct SuperAlgebra<F> {
    parity: Vec<Parity>,
    unit: Vec<F>,
    names: Vec<String>,
    sparse: Vec<SparseProduct<F>>,
}

impl<F: Scalar> std::fmt::Debug for SuperAlgebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SuperAlgebra")
            .field("field", &F::FIELD)
            .field("dim", &self.dim())
            .field("parity", &self.parity)
            .field("names", &self.names)
            .finish()
    }
}

impl<F: Scalar> PartialEq for SuperAlgebra<F> {
    /// Equality of presentations: same parities, structure constants and
    /// unit. Basis names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.parity == other.parity && self.sparse == other.sparse && self.unit == other.unit
    }
}

impl<F: Scalar> SuperAlgebra<F> {
    /// Builds and fully validates a superalgebra.
    pub fn new(parity: Vec<Parity>, mul: Vec<Vec<Vec<F>>>, unit: Vec<F>) -> Result<Self, AlgebraError> {
        Self::with_validation(parity, mul, unit, Validation::Full)
    }

    pub fn with_validation(
        parity: Vec<Parity>,
        mul: Vec<Vec<Vec<F>>>,
        unit: Vec<F>,
        validation: Validation,
    ) -> Result<Self, AlgebraError> {
        let n = parity.len();
        if mul.len() != n || mul.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(AlgebraError::Shape(format!("multiplication table must be {n}x{n}x{n}")));
        }
        let sparse = mul
            .into_iter()
            .flatten()
            .map(|v| v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        Self::from_sparse(parity, sparse, unit, validation)
    }

    /// Builds an algebra from sparse products, `products[i·dim + j]` holding
    /// `b_i b_j`. Entries may come in any order; zeros are dropped and
    /// repeated indices summed.
    pub fn from_sparse(
        parity: Vec<Parity>,
        products: Vec<SparseProduct<F>>,
        unit: Vec<F>,
        validation: Validation,
    ) -> Result<Self, AlgebraError> {
        let n = parity.len();
        if n == 0 {
            return Err(AlgebraError::Shape("dimension must be positive".into()));
        }
        if unit.len() != n {
            return Err(AlgebraError::Shape(format!("unit has {} coordinates, expected {n}", unit.len())));
        }
        if products.len() != n * n || products.iter().flatten().any(|(k, _)| *k >= n) {
            return Err(AlgebraError::Shape(format!("multiplication table must be {n}x{n}x{n}")));
        }
        let sparse = products.into_iter().map(canonical_sparse).collect();
        let names = (0..n).map(|i| format!("b{i}")).collect();
        let alg = SuperAlgebra {
            parity,
            unit,
            names,
            sparse,
        };
        if validation == Validation::Full {
            alg.validate()?;
        }
        Ok(alg)
    }

    /// Replaces the display names of the basis elements.
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim(), "one name per basis element");
        self.names = names;
        self
    }

    pub fn field(&self) -> FieldTag {
        F::FIELD
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[Parity] {
        &self.parity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    /// Dense structure constants `c_{ij}^k` as `table()[i][j][k]`.
    pub fn table(&self) -> Vec<Vec<Vec<F>>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = vec![F::zero(); n];
                        for (k, c) in self.basis_product(i, j) {
                            v[*k] = c.clone();
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }

    /// The coefficient `c_{ij}^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> F {
        self.basis_product(i, j)
            .iter()
            .find(|(l, _)| *l == k)
            .map_or_else(F::zero, |(_, c)| c.clone())
    }

    pub fn even_indices(&self) -> Vec<usize> {
        self.indices_of(Parity::Even)
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        self.indices_of(Parity::Odd)
    }

    fn indices_of(&self, p: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity[i] == p).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    pub fn zero_vector(&self) -> Vec<F> {
        vec![F::zero(); self.dim()]
    }

    /// Checks the grading, associativity and unit law exhaustively.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let expected = self.parity[i].add(self.parity[j]);
                if let Some(&(k, _)) = self.sparse[i * n + j].iter().find(|(k, _)| self.parity[*k] != expected) {
                    return Err(AlgebraError::GradingViolation { i, j, k });
                }
            }
        }
        if self.unit.iter().enumerate().any(|(k, c)| !c.is_zero() && self.parity[k].is_odd()) {
            return Err(AlgebraError::BadUnit(None));
        }
        for x in 0..n {
            let bx = self.basis_vector(x);
            if self.mul_coords(&self.unit, &bx) != bx || self.mul_coords(&bx, &self.unit) != bx {
                return Err(AlgebraError::BadUnit(Some(x)));
            }
        }
        let mut left = vec![F::zero(); n];
        let mut right = vec![F::zero(); n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    left.iter_mut().for_each(|c| *c = F::zero());
                    right.iter_mut().for_each(|c| *c = F::zero());
                    // (b_i b_j) b_k
                    for (l, c) in &self.sparse[i * n + j] {
                        for (m, d) in &self.sparse[l * n + k] {
                            left[*m].add_assign(&c.mul(d));
                        }
                    }
                    // b_i (b_j b_k)
                    for (l, c) in &self.sparse[j * n + k] {
                        for (m, d) in &self.sparse[i * n + l] {
                            right[*m].add_assign(&c.mul(d));
                        }
                    }
                    if left != right {
                        return Err(AlgebraError::NonAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// Bilinear product of coordinate vectors.
    pub fn mul_coords(&self, a: &[F], b: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x.mul(y);
                for (k, c) in &self.sparse[i * n + j] {
                    out[*k].add_assign(&xy.mul(c));
                }
            }
        }
        out
    }

    /// `b_i b_j` as a sparse coordinate list.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.sparse[i * self.dim() + j]
    }

    /// Parity of a coordinate vector; the zero vector counts as even.
    pub fn parity_tag(&self, coords: &[F]) -> ParityTag {
        let mut even = false;
        let mut odd = false;
        for (k, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                match self.parity[k] {
                    Parity::Even => even = true,
                    Parity::Odd => odd = true,
                }
            }
        }
        match (even, odd) {
            (_, false) => ParityTag::Even,
            (false, true) => ParityTag::Odd,
            (true, true) => ParityTag::Mixed,
        }
    }

    /// Matrix of `x ↦ a·x`: column `k` holds the coordinates of `a·b_k`.
    pub fn left_mul_matrix(&self, a: &[F]) -> LinearOperator<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|k| self.mul_coords(a, &self.basis_vector(k))).collect();
        Matrix::from_columns(&cols).expect("square by construction")
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mul_matrix(&self, a: &[F]) -> LinearOperator<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|k| self.mul_coords(&self.basis_vector(k), a)).collect();
        Matrix::from_columns(&cols).expect("square by construction")
    }

    /// Two-sided inverse, found by solving `L_a x = 1` and checking both
    /// products.
    pub fn invert_coords(&self, a: &[F]) -> Result<Vec<F>, AlgebraError> {
        let sol = self.left_mul_matrix(a).solve(&self.unit);
        let x = sol.particular.ok_or(AlgebraError::NotInvertible)?;
        if self.mul_coords(&x, a) != self.unit || self.mul_coords(a, &x) != self.unit {
            return Err(AlgebraError::NotInvertible);
        }
        Ok(x)
    }

    pub fn is_invertible(&self, a: &[F]) -> bool {
        self.left_mul_matrix(a).is_invertible()
    }

    /// Coefficient `λ` with `x = λ·1`, if `x` is a scalar multiple of the unit.
    pub fn unit_multiple(&self, x: &[F]) -> Option<F> {
        let k = self.unit.iter().position(|c| !c.is_zero())?;
        let lambda = x[k].div(&self.unit[k]).ok()?;
        (linalg::scale_vec(&lambda, &self.unit) == x).then_some(lambda)
    }

    /// The even subalgebra `A_0`, together with the ambient index of each of
    /// its basis elements.
    pub fn even_subalgebra(&self) -> (SuperAlgebra<F>, Vec<usize>) {
        let idx = self.even_indices();
        let m = idx.len();
        let mut position = vec![usize::MAX; self.dim()];
        for (new, &old) in idx.iter().enumerate() {
            position[old] = new;
        }
        let products = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.basis_product(i, j).iter().map(|(k, c)| (position[*k], c.clone())).collect())
            .collect();
        let unit = idx.iter().map(|&k| self.unit[k].clone()).collect();
        let names = idx.iter().map(|&k| self.names[k].clone()).collect();
        let even = SuperAlgebra::from_sparse(vec![Parity::Even; m], products, unit, Validation::Trusted)
            .expect("even part of a valid superalgebra")
            .with_names(names);
        (even, idx)
    }

    /// Re-expresses the algebra in the basis `b'_i = Σ_k P_{ki} b_k`. The
    /// matrix must be invertible and must not mix even and odd basis
    /// elements.
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<SuperAlgebra<F>, AlgebraError> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(AlgebraError::BadBasisChange);
        }
        for i in 0..n {
            for k in 0..n {
                if !p[(k, i)].is_zero() && self.parity[k] != self.parity[i] {
                    return Err(AlgebraError::BadBasisChange);
                }
            }
        }
        let p_inv = p.inverse().ok_or(AlgebraError::BadBasisChange)?;
        let new_basis: Vec<Vec<F>> = (0..n).map(|i| p.column(i)).collect();
        let mul = new_basis
            .iter()
            .map(|x| new_basis.iter().map(|y| p_inv.mul_vec(&self.mul_coords(x, y))).collect())
            .collect();
        let unit = p_inv.mul_vec(&self.unit);
        SuperAlgebra::new(self.parity.clone(), mul, unit)
    }

    /// Human-readable linear combination of basis names.
    pub fn format_coords(&self, coords: &[F]) -> String {
        let terms: Vec<String> = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                if c.is_one() {
                    self.names[k].clone()
                } else if c.neg().is_one() {
                    format!("-{}", self.names[k])
                } else {
                    format!("{c}·{}", self.names[k])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }

    pub fn element(&self, coords: Vec<F>) -> Result<Element<'_, F>, AlgebraError> {
        Element::new(self, coords)
    }

    pub fn unit_element(&self) -> Element<'_, F> {
        Element::new(self, self.unit.clone()).expect("unit has the right length")
    }

    pub fn basis_element(&self, i: usize) -> Element<'_, F> {
        Element::new(self, self.basis_vector(i)).expect("basis vector has the right length")
    }
}

fn canonical_sparse<F: Scalar>(mut entries: SparseProduct<F>) -> SparseProduct<F> {
    entries.sort_by_key(|(k, _)| *k);
    let mut out: SparseProduct<F> = Vec::with_capacity(entries.len());
    for (k, c) in entries {
        match out.last_mut() {
            Some((last, acc)) if *last == k => acc.add_assign(&c),
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, r, Rational};

    /// Quaternions over basis (1, i, j, k), signs supplied by `sign(a, b)`.
    pub(crate) fn quaternion_table(flip_jk: bool) -> Vec<Vec<Vec<Rational>>> {
        // (index, sign) of b_a b_b.
        let prod = |a: usize, b: usize| -> (usize, i64) {
            match (a, b) {
                (0, x) | (x, 0) => (x, 1),
                (x, y) if x == y => (0, -1),
                (1, 2) => (3, 1),
                (2, 1) => (3, -1),
                (2, 3) => (1, if flip_jk { -1 } else { 1 }),
                (3, 2) => (1, -1),
                (3, 1) => (2, 1),
                (1, 3) => (2, -1),
                _ => unreachable!(),
            }
        };
        (0..4)
            .map(|a| {
                (0..4)
                    .map(|b| {
                        let (k, s) = prod(a, b);
                        let mut v = vec![r(0); 4];
                        v[k] = r(s);
                        v
                    })
                    .collect()
            })
            .collect()
    }

    fn quaternions() -> SuperAlgebra<Rational> {
        SuperAlgebra::new(vec![Parity::Even; 4], quaternion_table(false), vec![r(1), r(0), r(0), r(0)]).unwrap()
    }

    #[test]
    fn quaternion_table_is_valid() {
        let h = quaternions();
        assert_eq!(h.dim(), 4);
        assert!(h.odd_indices().is_empty());
    }

    #[test]
    fn one_dimensional_unit_algebra() {
        let a = SuperAlgebra::new(vec![Parity::Even], vec![vec![vec![r(1)]]], vec![r(1)]).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn corrupted_quaternions_are_not_associative() {
        // With jk = -i: (ij)k = kk = -1 but i(jk) = i(-i) = +1.
        let err = SuperAlgebra::new(vec![Parity::Even; 4], quaternion_table(true), vec![r(1), r(0), r(0), r(0)])
            .unwrap_err();
        let AlgebraError::NonAssociative { i, j, k } = err else {
            panic!("expected NonAssociative, got {err:?}");
        };
        // The reported triple really is a witness.
        let t = quaternion_table(true);
        let basis_mul = |x: &[Rational], y: usize| -> Vec<Rational> {
            let mut out = vec![r(0); 4];
            for (l, c) in x.iter().enumerate() {
                for m in 0..4 {
                    out[m] = out[m].add(&c.mul(&t[l][y][m]));
                }
            }
            out
        };
        let left = basis_mul(&t[i][j], k);
        let jk = &t[j][k];
        let mut right = vec![r(0); 4];
        for (l, c) in jk.iter().enumerate() {
            for m in 0..4 {
                right[m] = right[m].add(&c.mul(&t[i][l][m]));
            }
        }
        assert_ne!(left, right);
    }

    #[test]
    fn grading_violation_is_reported() {
        // Odd generator whose square has an odd component.
        let mul = vec![
            vec![vec![r(1), r(0)], vec![r(0), r(1)]],
            vec![vec![r(0), r(1)], vec![r(0), r(1)]],
        ];
        let err = SuperAlgebra::new(vec![Parity::Even, Parity::Odd], mul, vec![r(1), r(0)]).unwrap_err();
        assert_eq!(err, AlgebraError::GradingViolation { i: 1, j: 1, k: 1 });
    }

    #[test]
    fn bad_unit_is_reported() {
        let a = SuperAlgebra::new(vec![Parity::Even], vec![vec![vec![r(1)]]], vec![r(2)]);
        assert_eq!(a.unwrap_err(), AlgebraError::BadUnit(Some(0)));
        let shape = SuperAlgebra::new(vec![Parity::Even], vec![vec![vec![r(1)]]], vec![r(1), r(0)]);
        assert!(matches!(shape, Err(AlgebraError::Shape(_))));
    }

    #[test]
    fn quaternion_left_multiplication_by_i() {
        let h = quaternions();
        let li = h.left_mul_matrix(&h.basis_vector(1));
        // Columns are i·(1, i, j, k) = (i, -1, k, -j).
        assert_eq!(li.column(0), vec![r(0), r(1), r(0), r(0)]);
        assert_eq!(li.column(1), vec![r(-1), r(0), r(0), r(0)]);
        assert_eq!(li.column(2), vec![r(0), r(0), r(0), r(1)]);
        assert_eq!(li.column(3), vec![r(0), r(0), r(-1), r(0)]);
        assert_eq!(h.left_mul_matrix(h.unit()), Matrix::identity(4));
    }

    #[test]
    fn complex_numbers_as_real_algebra_inverse() {
        let mul = vec![
            vec![vec![r(1), r(0)], vec![r(0), r(1)]],
            vec![vec![r(0), r(1)], vec![r(-1), r(0)]],
        ];
        let c = SuperAlgebra::new(vec![Parity::Even; 2], mul, vec![r(1), r(0)]).unwrap();
        let inv = c.invert_coords(&[r(1), r(1)]).unwrap();
        assert_eq!(inv, vec![q(1, 2), q(-1, 2)]);
        assert!(c.invert_coords(&[r(0), r(0)]).is_err());
    }

    #[test]
    fn basis_change_requires_even_block_matrix() {
        let h = quaternions();
        let mut p = Matrix::<Rational>::identity(4);
        p[(1, 0)] = r(1);
        p[(0, 1)] = r(2);
        // Purely even, so any invertible matrix is allowed.
        let h2 = h.change_basis(&p).unwrap();
        assert_eq!(h2.dim(), 4);
        assert!(h.change_basis(&Matrix::zeros(4, 4)).is_err());
    }

    #[test]
    fn formatting() {
        let h = quaternions().with_names(vec!["1".into(), "i".into(), "j".into(), "k".into()]);
        assert_eq!(h.format_coords(&[r(0), r(1), r(-1), q(1, 2)]), "i - j + 1/2·k");
        assert_eq!(h.format_coords(&vec![r(0); 4]), "0");
    }
}
