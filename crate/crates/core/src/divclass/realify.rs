use crate::scalar::{GaussianRational, Rational, Scalar};
use crate::superalg::{validation_for, SuperAlgebra};

/// Restriction of scalars from the Gaussian rationals to the rationals.
///
/// Basis element `b_k` of the complex algebra becomes the pair `b_k` (index
/// `2k`) and `i·b_k` (index `2k+1`), both with the parity of `b_k`.
pub fn realify(alg: &SuperAlgebra<GaussianRational>) -> SuperAlgebra<Rational> {
    let n = alg.dim();
    let rn = 2 * n;
    let i = GaussianRational::i();
    let phase = |t: usize| if t == 0 { GaussianRational::one() } else { i.clone() };

    let mut products = vec![Vec::new(); rn * rn];
    for a in 0..n {
        for b in 0..n {
            for (k, c) in alg.basis_product(a, b) {
                for s in 0..2 {
                    for t in 0..2 {
                        // (i^s b_a)(i^t b_b) = i^{s+t} c b_k
                        let coeff = phase(s).mul(&phase(t)).mul(c);
                        let out: &mut Vec<(usize, Rational)> = &mut products[(2 * a + s) * rn + 2 * b + t];
                        out.push((2 * k, coeff.re.clone()));
                        out.push((2 * k + 1, coeff.im.clone()));
                    }
                }
            }
        }
    }
    let unit = alg
        .unit()
        .iter()
        .flat_map(|z| [z.re.clone(), z.im.clone()])
        .collect();
    let parity = alg.parity().iter().flat_map(|&p| [p, p]).collect();
    let names = alg
        .names()
        .iter()
        .flat_map(|name| [name.clone(), if name == "1" { "i".to_string() } else { format!("i{name}") }])
        .collect();
    SuperAlgebra::from_sparse(parity, products, unit, validation_for(rn))
        .expect("realification of a valid complex algebra is valid")
        .with_names(names)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divclass::{classify, TenfoldClass};
    use crate::superalg::Parity;

    fn complex_line() -> SuperAlgebra<GaussianRational> {
        SuperAlgebra::new(
            vec![Parity::Even],
            vec![vec![vec![GaussianRational::one()]]],
            vec![GaussianRational::one()],
        )
        .unwrap()
    }

    #[test]
    fn complex_line_realifies_to_c() {
        let c = realify(&complex_line());
        assert_eq!(c.dim(), 2);
        assert_eq!(classify(&c).unwrap().class, TenfoldClass::C);
    }

    #[test]
    fn dimension_doubles() {
        let a = crate::superalg::graded_tensor(&complex_line(), &complex_line()).unwrap();
        assert_eq!(realify(&a).dim(), 2 * a.dim());
    }
}
