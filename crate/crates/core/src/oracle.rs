//! Brute-force ground truth for desk-scale matrices.
//!
//! These routines share no elimination code with the modular pipeline:
//! the characteristic polynomial comes from the Faddeev-LeVerrier trace
//! recurrence over the integers, the minimal polynomial from Krylov
//! elimination over the rationals, and diagonal minors from fraction-free
//! Bareiss determinants.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;
use crate::poly::IntPolynomial;

pub const CHARPOLY_ORACLE_LIMIT: usize = 64;
pub const MINPOLY_ORACLE_LIMIT: usize = 32;
pub const MINOR_SUM_ORACLE_LIMIT: usize = 10;

fn guard(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::SizeGuard { n, limit });
    }
    Ok(())
}

type Dense = Vec<Vec<BigInt>>;

fn to_dense(a: &IntegerMatrix) -> Dense {
    (0..a.n()).map(|i| a.row(i).to_vec()).collect()
}

fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// `det(XI - A)` by the Faddeev-LeVerrier recurrence
/// `M_k = A M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(A M_k) / k`, with exact
/// integer division at every step.
pub fn oracle_charpoly(a: &IntegerMatrix) -> Result<IntPolynomial> {
    let n = a.n();
    guard(n, CHARPOLY_ORACLE_LIMIT)?;
    let dense = to_dense(a);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // a_m holds A * M_k
    let mut a_m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut m = a_m;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        a_m = matmul(&dense, &m);
        let trace: BigInt = (0..n).map(|i| &a_m[i][i]).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "trace divisible by k");
        coeffs[n - k] = -q;
    }
    Ok(IntPolynomial::new(coeffs))
}

type QPoly = Vec<BigRational>;

fn q_trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn q_monic(p: QPoly) -> QPoly {
    let p = q_trim(p);
    match p.last().cloned() {
        Some(lead) => p.into_iter().map(|c| c / &lead).collect(),
        None => p,
    }
}

fn q_div_rem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let b = q_trim(b.clone());
    let db = b.len() - 1;
    let mut rem = q_trim(a.clone());
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let q = &rem[k + db] / &b[db];
        if q.is_zero() {
            continue;
        }
        for (i, c) in b.iter().enumerate() {
            rem[k + i] -= &q * c;
        }
        quot[k] = q;
    }
    rem.truncate(db);
    (q_trim(quot), q_trim(rem))
}

fn q_mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn q_lcm(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = q_div_rem(&x, &y).1;
        x = y;
        y = r;
    }
    let g = q_monic(x);
    q_monic(q_mul(&q_div_rem(a, &g).0, b))
}

fn rational_vector_minpoly(a: &IntegerMatrix, k: usize) -> QPoly {
    let n = a.n();
    let entry = |i: usize, j: usize| BigRational::from_integer(a.get(i, j).clone());
    let mut basis: Vec<(usize, Vec<BigRational>, QPoly)> = Vec::new();
    let mut krylov: Vec<BigRational> = (0..n)
        .map(|i| {
            if i == k {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    for step in 0..=n {
        let mut r = krylov.clone();
        let mut q: QPoly = vec![BigRational::zero(); step + 1];
        q[step] = BigRational::one();
        for (pivot, v, poly) in &basis {
            let c = r[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(v) {
                *x -= &c * y;
            }
            for (x, y) in q.iter_mut().zip(poly) {
                *x -= &c * y;
            }
        }
        match r.iter().position(|x| !x.is_zero()) {
            None => return q_monic(q),
            Some(pivot) => {
                let s = r[pivot].clone();
                let r = r.into_iter().map(|x| x / &s).collect();
                let q = q.into_iter().map(|x| x / &s).collect();
                basis.push((pivot, r, q));
            }
        }
        krylov = (0..n)
            .map(|i| (0..n).map(|j| entry(i, j) * &krylov[j]).sum())
            .collect();
    }
    unreachable!("Krylov space dimension exceeds n")
}

/// Minimal polynomial over the rationals, as the LCM of the minimal
/// polynomials of all standard basis vectors. It is monic with integer
/// coefficients; `m(A) = 0` is certified before returning.
pub fn oracle_minpoly(a: &IntegerMatrix) -> Result<IntPolynomial> {
    let n = a.n();
    guard(n, MINPOLY_ORACLE_LIMIT)?;
    let mut m: QPoly = vec![BigRational::one()];
    for k in 0..n {
        m = q_lcm(&m, &rational_vector_minpoly(a, k));
    }
    let coeffs = m
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Verification(format!("non-integral coefficient {c}")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = IntPolynomial::new(coeffs);
    if !poly.annihilates(a) {
        return Err(Error::Verification(
            "oracle minimal polynomial does not annihilate A".into(),
        ));
    }
    Ok(poly)
}

/// Fraction-free (Bareiss) determinant of a square block.
fn bareiss_det(mut m: Dense) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Sum of all diagonal minors of order `n - j`. Equals `(-1)^(n-j) c_j`
/// where `c_j` is the coefficient of `X^j` in `det(XI - A)`.
pub fn oracle_minor_sum(a: &IntegerMatrix, j: usize) -> Result<BigInt> {
    let n = a.n();
    guard(n, MINOR_SUM_ORACLE_LIMIT)?;
    if j > n {
        return Err(Error::Domain { index: j, n });
    }
    let size = n - j;
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != size {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let block = idx
            .iter()
            .map(|&r| idx.iter().map(|&c| a.get(r, c).clone()).collect())
            .collect();
        total += bareiss_det(block);
    }
    Ok(total)
}

/// `max_i C(d, i) beta^(d-i)`, computed exactly.
pub fn max_binomial_term(beta: u64, d: u32) -> BigUint {
    let mut best = BigUint::zero();
    let mut binom = BigUint::one();
    for i in 0..=d {
        if i > 0 {
            binom = binom * (d - i + 1) / i;
        }
        let term = &binom * BigUint::from(beta).pow(d - i);
        if term > best {
            best = term;
        }
    }
    best
}

/// Index of the largest `log2 F(n, j)` over `j = 0..=n/2`, from the
/// direct formula with an exact binomial.
pub fn exhaustive_minor_argmax(n: usize, b: f64) -> (usize, f64) {
    let log2_b_sq = if b <= 1.0 { 0.0 } else { 2.0 * b.log2() };
    let mut best = (0, f64::NEG_INFINITY);
    let mut binom = BigUint::one();
    for j in 0..=n / 2 {
        if j > 0 {
            binom = binom * (n - j + 1) / j;
        }
        let k = (n - j) as f64;
        let hadamard = if k == 0.0 {
            0.0
        } else {
            k / 2.0 * (k.log2() + log2_b_sq)
        };
        let v = crate::crt::log2_biguint(&binom) + hadamard;
        if v > best.1 {
            best = (j, v);
        }
    }
    best
}
