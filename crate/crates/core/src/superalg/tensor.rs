use super::{AlgebraError, Parity, SuperAlgebra, Validation};
use crate::scalar::Scalar;

/// Largest dimension that is validated exhaustively on construction.
pub const VALIDATION_LIMIT: usize = 64;

pub(crate) fn validation_for(dim: usize) -> Validation {
    if dim <= VALIDATION_LIMIT {
        Validation::Full
    } else {
        Validation::Trusted
    }
}

/// Graded tensor product `A ⊗̂ B`.
///
/// The basis is the ordered pairs `(i, j)`, flattened row-major as
/// `i·dim(B) + j`, with parity `|a_i| + |b_j|`. Products follow the Koszul
/// rule `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} (aa')⊗(bb')`.
pub fn graded_tensor<F: Scalar>(a: &SuperAlgebra<F>, b: &SuperAlgebra<F>) -> Result<SuperAlgebra<F>, AlgebraError> {
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let index = |i: usize, j: usize| i * db + j;

    let mut parity = Vec::with_capacity(n);
    let mut names = Vec::with_capacity(n);
    for i in 0..da {
        for j in 0..db {
            parity.push(a.parity()[i].add(b.parity()[j]));
            names.push(format!("{}⊗{}", a.names()[i], b.names()[j]));
        }
    }

    let mut products = vec![Vec::new(); n * n];
    for i in 0..da {
        for j in 0..db {
            for i2 in 0..da {
                let koszul = b.parity()[j] == Parity::Odd && a.parity()[i2] == Parity::Odd;
                let prod_a = a.basis_product(i, i2);
                for j2 in 0..db {
                    let out: &mut Vec<(usize, F)> = &mut products[index(i, j) * n + index(i2, j2)];
                    for (k, c) in prod_a {
                        for (l, d) in b.basis_product(j, j2) {
                            let coeff = c.mul(d);
                            out.push((index(*k, *l), if koszul { coeff.neg() } else { coeff }));
                        }
                    }
                }
            }
        }
    }

    let mut unit = vec![F::zero(); n];
    for (i, x) in a.unit().iter().enumerate() {
        for (j, y) in b.unit().iter().enumerate() {
            unit[index(i, j)] = x.mul(y);
        }
    }

    Ok(SuperAlgebra::from_sparse(parity, products, unit, validation_for(n))?.with_names(names))
}
