use std::fmt;

use super::{AlgebraError, SuperAlgebra};
use crate::linalg::{self, LinearOperator};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityTag {
    Even,
    Odd,
    Mixed,
}

impl ParityTag {
    pub fn is_homogeneous(self) -> bool {
        self != ParityTag::Mixed
    }
}

/// An element of a particular superalgebra.
#[derive(Clone)]
pub struct Element<'a, F> {
    algebra: &'a SuperAlgebra<F>,
    coords: Vec<F>,
    parity: ParityTag,
}

impl<'a, F: Scalar> Element<'a, F> {
    pub fn new(algebra: &'a SuperAlgebra<F>, coords: Vec<F>) -> Result<Self, AlgebraError> {
        if coords.len() != algebra.dim() {
            return Err(AlgebraError::Shape(format!(
                "element has {} coordinates, algebra has dimension {}",
                coords.len(),
                algebra.dim()
            )));
        }
        let parity = algebra.parity_tag(&coords);
        Ok(Element { algebra, coords, parity })
    }

    pub fn algebra(&self) -> &'a SuperAlgebra<F> {
        self.algebra
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F> {
        self.coords
    }

    pub fn parity(&self) -> ParityTag {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.coords)
    }

    fn same_algebra(&self, other: &Self) -> Result<(), AlgebraError> {
        if std::ptr::eq(self.algebra, other.algebra) {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }

    fn wrap(&self, coords: Vec<F>) -> Self {
        Element::new(self.algebra, coords).expect("same dimension")
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_algebra(other)?;
        Ok(self.wrap(self.algebra.mul_coords(&self.coords, &other.coords)))
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_algebra(other)?;
        Ok(self.wrap(linalg::add_vec(&self.coords, &other.coords)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_algebra(other)?;
        Ok(self.wrap(linalg::sub_vec(&self.coords, &other.coords)))
    }

    pub fn scale(&self, s: &F) -> Self {
        self.wrap(linalg::scale_vec(s, &self.coords))
    }

    pub fn neg(&self) -> Self {
        self.wrap(linalg::neg_vec(&self.coords))
    }

    pub fn square(&self) -> Self {
        self.wrap(self.algebra.mul_coords(&self.coords, &self.coords))
    }

    pub fn invert(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        Ok(self.wrap(self.algebra.invert_coords(&self.coords)?))
    }

    pub fn left_mul_operator(&self) -> LinearOperator<F> {
        self.algebra.left_mul_matrix(&self.coords)
    }
}

impl<F: Scalar> PartialEq for Element<'_, F> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.algebra, other.algebra) && self.coords == other.coords
    }
}

impl<F: Scalar> fmt::Display for Element<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.format_coords(&self.coords))
    }
}

impl<F: Scalar> fmt::Debug for Element<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self}, {:?})", self.parity)
    }
}
