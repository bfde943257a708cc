//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's own Clifford or tensor code.

#![allow(dead_code)]

use rand::Rng;
use tenfold_core::linalg::Matrix;
use tenfold_core::scalar::{q, r, Rational, Scalar};
use tenfold_core::superalg::{Parity, SuperAlgebra};

/// Blades as bitmasks, listed by size and then lexicographically by their
/// sorted index lists.
pub fn blade_order(n: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    let key = |m: &u32| {
        let idx: Vec<u32> = (0..n as u32).filter(|b| m & (1 << b) != 0).collect();
        (idx.len(), idx)
    };
    masks.sort_by_key(key);
    masks
}

/// `e_A e_B = sign · e_{A xor B}` with `e_i² = squares[i]`.
pub fn blade_product(a: u32, b: u32, squares: &[i64]) -> (i64, u32) {
    let mut swaps = 0;
    for bit in 0..32 {
        if b & (1 << bit) != 0 {
            swaps += (a >> (bit + 1)).count_ones();
        }
    }
    let mut sign = if swaps % 2 == 0 { 1 } else { -1 };
    for (i, &s) in squares.iter().enumerate() {
        if a & b & (1 << i) != 0 {
            sign *= s;
        }
    }
    (sign, a ^ b)
}

pub fn squares(p: usize, q: usize) -> Vec<i64> {
    std::iter::repeat_n(1, p).chain(std::iter::repeat_n(-1, q)).collect()
}

/// Dense table of `Cl(p,q)` in blade order.
pub fn clifford_oracle_table(p: usize, q: usize) -> Vec<Vec<Vec<Rational>>> {
    let n = p + q;
    let order = blade_order(n);
    let pos = |m: u32| order.iter().position(|&x| x == m).unwrap();
    let sq = squares(p, q);
    let dim = order.len();
    order
        .iter()
        .map(|&a| {
            order
                .iter()
                .map(|&b| {
                    let (s, m) = blade_product(a, b, &sq);
                    let mut v = vec![Rational::zero(); dim];
                    v[pos(m)] = r(s);
                    v
                })
                .collect()
        })
        .collect()
}

/// Multiplication in `Cl(p,q) ⊗̂ Cl(1,1)` computed blade by blade, with basis
/// index `i·4 + j`.
pub fn periodic_target_mul(p: usize, q: usize, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let left = blade_order(p + q);
    let right = blade_order(2);
    let sq_l = squares(p, q);
    let sq_r = squares(1, 1);
    let dr = right.len();
    let dim = left.len() * dr;
    let pos_l = |m: u32| left.iter().position(|&v| v == m).unwrap();
    let pos_r = |m: u32| right.iter().position(|&v| v == m).unwrap();
    let mut out = vec![Rational::zero(); dim];
    for (s, xs) in x.iter().enumerate() {
        if xs.is_zero() {
            continue;
        }
        for (t, yt) in y.iter().enumerate() {
            if yt.is_zero() {
                continue;
            }
            let (a, b) = (left[s / dr], right[s % dr]);
            let (a2, b2) = (left[t / dr], right[t % dr]);
            let koszul = if b.count_ones() % 2 == 1 && a2.count_ones() % 2 == 1 { -1 } else { 1 };
            let (s1, m1) = blade_product(a, a2, &sq_l);
            let (s2, m2) = blade_product(b, b2, &sq_r);
            let k = pos_l(m1) * dr + pos_r(m2);
            out[k] = out[k].add(&xs.mul(yt).mul(&r(koszul * s1 * s2)));
        }
    }
    out
}

/// Gaussian elimination rank, written out separately from the library.
pub fn oracle_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip().unwrap();
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].mul(&inv);
                for j in c..cols {
                    let d = f.mul(&m[rank][j]);
                    m[i][j] = m[i][j].sub(&d);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    q(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| random_rational(rng)).collect()
}

/// Random nonzero vector supported on `indices`.
pub fn random_supported(rng: &mut impl Rng, n: usize, indices: &[usize]) -> Vec<Rational> {
    loop {
        let mut v = vec![Rational::zero(); n];
        for &i in indices {
            v[i] = random_rational(rng);
        }
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// Random invertible matrix that maps even basis vectors into the even
/// span and odd into the odd span.
pub fn random_graded_change(rng: &mut impl Rng, parity: &[Parity]) -> Matrix<Rational> {
    let n = parity.len();
    loop {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for k in 0..n {
                if parity[i] == parity[k] {
                    m[(k, i)] = r(rng.gen_range(-3..=3));
                }
            }
        }
        if m.is_invertible() {
            return m;
        }
    }
}

/// `Σ_k c_k b_k` product computed from a dense table.
pub fn dense_mul(table: &[Vec<Vec<Rational>>], x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = x.len();
    let mut out = vec![Rational::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            let c = x[i].mul(&y[j]);
            for k in 0..n {
                if !table[i][j][k].is_zero() {
                    out[k] = out[k].add(&c.mul(&table[i][j][k]));
                }
            }
        }
    }
    out
}

pub fn alg_invertible_by_oracle(alg: &SuperAlgebra<Rational>, x: &[Rational]) -> bool {
    let table = alg.table();
    let n = alg.dim();
    let columns: Vec<Vec<Rational>> = (0..n)
        .map(|k| {
            let mut e = vec![Rational::zero(); n];
            e[k] = Rational::one();
            dense_mul(&table, x, &e)
        })
        .collect();
    oracle_rank(&columns) == n
}
