//! Dense exact linear algebra: reduced row echelon form, rank, nullspaces and
//! solution sets. This is the elimination engine behind inversion,
//! commutants and the recentering step of the classifier.

use std::fmt;

use crate::scalar::Scalar;

/// A dense row-major matrix of exact scalars.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Matrices also serve as linear operators on coordinate vectors.
pub type LinearOperator<F> = Matrix<F>;

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from row-major data; `None` on a length mismatch.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Option<Self> {
        (data.len() == rows * cols).then_some(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<F>]) -> Option<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return None;
        }
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Some(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_mat(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)].add_assign(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix/vector shape mismatch");
        (0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect()
    }

    pub fn add_mat(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, F::add)
    }

    pub fn sub_mat(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, F::sub)
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul(s)).collect(),
        }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc.add(&self[(i, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[Matrix<F>]) -> Option<Self> {
        let cols = blocks.first()?.cols;
        if blocks.iter().any(|b| b.cols != cols) {
            return None;
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let data = blocks.iter().flat_map(|b| b.data.iter().cloned()).collect();
        Some(Matrix { rows, cols, data })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip().expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul(&inv);
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let delta = factor.mul(&m[(r, j)]);
                        m[(i, j)] = m[(i, j)].sub(&delta);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let e = aug.rref();
        if e.pivots.len() < n || e.pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = e.reduced[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            let pivot = m[(c, c)].clone();
            det = det.mul(&pivot);
            let inv = pivot.recip().expect("pivot is nonzero");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].mul(&inv);
                for j in c..n {
                    let delta = factor.mul(&m[(c, j)]);
                    m[(i, j)] = m[(i, j)].sub(&delta);
                }
            }
        }
        det
    }

    /// Nullspace basis in canonical form: one vector per free column, in
    /// increasing column order, with a 1 in that column and zeros in the
    /// other free columns.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        self.rref().nullspace()
    }

    /// Solves `self · x = rhs` exactly.
    pub fn solve(&self, rhs: &[F]) -> SolutionSet<F> {
        assert_eq!(rhs.len(), self.rows, "right-hand side has the wrong length");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let e = aug.rref();
        let nullspace = {
            // Nullspace of the coefficient part only.
            let coeff_pivots: Vec<usize> = e.pivots.iter().copied().filter(|&p| p < self.cols).collect();
            nullspace_from(&e.reduced, &coeff_pivots, self.cols)
        };
        let particular = if e.pivots.last() == Some(&self.cols) {
            None
        } else {
            let mut x = vec![F::zero(); self.cols];
            for (r, &p) in e.pivots.iter().enumerate() {
                x[p] = e.reduced[(r, self.cols)].clone();
            }
            Some(x)
        };
        SolutionSet { particular, nullspace }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Clone)]
pub struct Echelon<F> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Scalar> fmt::Debug for Echelon<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Echelon")
            .field("reduced", &self.reduced)
            .field("pivots", &self.pivots)
            .finish()
    }
}

impl<F: Scalar> Echelon<F> {
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        nullspace_from(&self.reduced, &self.pivots, self.reduced.cols)
    }
}

fn nullspace_from<F: Scalar>(reduced: &Matrix<F>, pivots: &[usize], ncols: usize) -> Vec<Vec<F>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut v = vec![F::zero(); ncols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = reduced[(r, free)].neg();
            }
            v
        })
        .collect()
}

/// All solutions of a linear system: `particular + span(nullspace)`, or no
/// solutions when `particular` is `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet<F> {
    pub particular: Option<Vec<F>>,
    pub nullspace: Vec<Vec<F>>,
}

impl<F> SolutionSet<F> {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }

    pub fn is_unique(&self) -> bool {
        self.particular.is_some() && self.nullspace.is_empty()
    }
}

pub fn dot<F: Scalar>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(F::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}

pub fn is_zero_vec<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vec<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn sub_vec<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn scale_vec<F: Scalar>(s: &F, v: &[F]) -> Vec<F> {
    v.iter().map(|x| s.mul(x)).collect()
}

pub fn neg_vec<F: Scalar>(v: &[F]) -> Vec<F> {
    v.iter().map(Scalar::neg).collect()
}

/// Rank of the matrix whose columns are `vectors`.
pub fn span_rank<F: Scalar>(vectors: &[Vec<F>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_columns(vectors).map_or(0, |m| m.rank())
}
