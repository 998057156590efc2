//! Per-prime computations over `Z/pZ`: matrix reduction, characteristic
//! polynomial by Hessenberg reduction and minimal polynomial by Krylov
//! sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

#[inline]
fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

#[inline]
fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

/// Square matrix over `Z/pZ`, row-major residues in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    n: usize,
    p: u64,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        let (n, p) = (self.n, self.p);
        (0..n)
            .map(|i| {
                let row = &self.data[i * n..(i + 1) * n];
                let acc = row.iter().zip(v).fold(0u128, |acc, (&a, &x)| {
                    (acc + a as u128 * x as u128) % p as u128
                });
                acc as u64
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// Entries of `a` reduced into `[0, p)`.
pub fn reduce_mod(a: &IntegerMatrix, p: u64) -> ModMatrix {
    let modulus = BigInt::from(p);
    let data = a
        .entries()
        .iter()
        .map(|x| x.mod_floor(&modulus).to_u64().expect("residue below p"))
        .collect();
    ModMatrix { n: a.n(), p, data }
}

/// Polynomial over `Z/pZ`; `coeffs[k]` multiplies `X^k`, trailing zeros
/// trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPolynomial {
    /// Reduces the coefficients modulo `p` and trims trailing zeros.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPolynomial { p, coeffs }
    }

    /// Reduction of an integer polynomial.
    pub fn from_int(poly: &crate::poly::IntPolynomial, p: u64) -> Self {
        let modulus = BigInt::from(p);
        ModPolynomial::new(
            p,
            poly.coeffs()
                .iter()
                .map(|c| c.mod_floor(&modulus).to_u64().expect("residue below p"))
                .collect(),
        )
    }

    fn one(p: u64) -> Self {
        ModPolynomial::new(p, vec![1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Coefficient of `X^k`, 0 beyond the degree.
    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    fn monic(mut self) -> Self {
        if let Some(&lead) = self.coeffs.last() {
            let li = inv(lead, self.p);
            for c in &mut self.coeffs {
                *c = mul(*c, li, self.p);
            }
        }
        self
    }

    pub fn mul(&self, other: &ModPolynomial) -> ModPolynomial {
        let p = self.p;
        if self.is_zero() || other.is_zero() {
            return ModPolynomial::new(p, Vec::new());
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = add(out[i + j], mul(a, b, p), p);
            }
        }
        ModPolynomial::new(p, out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &ModPolynomial) -> (ModPolynomial, ModPolynomial) {
        let p = self.p;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = inv(divisor.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (ModPolynomial::new(p, Vec::new()), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = mul(rem[k + dd], lead_inv, p);
            if q == 0 {
                continue;
            }
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = sub(rem[k + i], mul(q, d, p), p);
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (ModPolynomial::new(p, quot), ModPolynomial::new(p, rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &ModPolynomial) -> ModPolynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple of two nonzero polynomials.
    pub fn lcm(&self, other: &ModPolynomial) -> ModPolynomial {
        let g = self.gcd(other);
        self.div_rem(&g).0.mul(other).monic()
    }

    /// `self(A) v` by Horner's rule.
    pub fn apply(&self, a: &ModMatrix, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut acc = vec![0u64; a.n()];
        for &c in self.coeffs.iter().rev() {
            acc = a.mul_vec(&acc);
            for (x, &vi) in acc.iter_mut().zip(v) {
                *x = add(*x, mul(c, vi, p), p);
            }
        }
        acc
    }

    /// Whether `self(A) = 0`, checked on every standard basis vector.
    pub fn annihilates(&self, a: &ModMatrix) -> bool {
        let n = a.n();
        (0..n).all(|k| {
            let mut e = vec![0u64; n];
            e[k] = 1 % self.p;
            self.apply(a, &e).iter().all(|&x| x == 0)
        })
    }
}

/// Reduces `a` to upper Hessenberg form by similarity transforms
/// (row elimination paired with the inverse column operation).
fn hessenberg(a: &ModMatrix) -> Vec<u64> {
    let (n, p) = (a.n, a.p);
    let mut h = a.data.clone();
    for m in 1..n.saturating_sub(1) {
        let c = m - 1;
        let Some(piv) = (m..n).find(|&i| h[i * n + c] != 0) else {
            continue;
        };
        if piv != m {
            for j in 0..n {
                h.swap(piv * n + j, m * n + j);
            }
            for i in 0..n {
                h.swap(i * n + piv, i * n + m);
            }
        }
        let piv_inv = inv(h[m * n + c], p);
        for i in m + 1..n {
            let u = mul(h[i * n + c], piv_inv, p);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                h[i * n + j] = sub(h[i * n + j], mul(u, h[m * n + j], p), p);
            }
            for r in 0..n {
                h[r * n + m] = add(h[r * n + m], mul(u, h[r * n + i], p), p);
            }
        }
    }
    h
}

/// `det(XI - A)` modulo `p`: Hessenberg reduction followed by the
/// standard recurrence on leading principal submatrices. O(n^3).
pub fn charpoly_mod(a: &ModMatrix) -> ModPolynomial {
    let (n, p) = (a.n, a.p);
    let h = hessenberg(a);
    let at = |i: usize, j: usize| h[i * n + j];
    // chain[m] = charpoly of the leading m x m block
    let mut chain: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    chain.push(vec![1 % p]);
    for m in 1..=n {
        let prev = &chain[m - 1];
        let diag = at(m - 1, m - 1);
        let mut next = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = add(next[k + 1], c, p);
            next[k] = sub(next[k], mul(diag, c, p), p);
        }
        let mut t = 1 % p;
        for i in 1..m {
            t = mul(t, at(m - i, m - i - 1), p);
            if t == 0 {
                break;
            }
            let factor = mul(t, at(m - i - 1, m - 1), p);
            if factor == 0 {
                continue;
            }
            for (k, &c) in chain[m - i - 1].iter().enumerate() {
                next[k] = sub(next[k], mul(factor, c, p), p);
            }
        }
        chain.push(next);
    }
    ModPolynomial::new(p, chain.pop().expect("n >= 0"))
}

/// Monic polynomial `q` of least degree with `q(A) v = 0`, from the first
/// linear dependency in the Krylov sequence `v, Av, A^2 v, ...`.
fn vector_minpoly(a: &ModMatrix, v: &[u64]) -> ModPolynomial {
    let p = a.p;
    struct Row {
        pivot: usize,
        vec: Vec<u64>,
        poly: Vec<u64>,
    }
    let mut rows: Vec<Row> = Vec::new();
    let mut krylov = v.to_vec();
    for k in 0..=a.n {
        let mut r = krylov.clone();
        let mut q = vec![0u64; k + 1];
        q[k] = 1;
        for row in &rows {
            let c = r[row.pivot];
            if c == 0 {
                continue;
            }
            for (x, &y) in r.iter_mut().zip(&row.vec) {
                *x = sub(*x, mul(c, y, p), p);
            }
            for (x, &y) in q.iter_mut().zip(&row.poly) {
                *x = sub(*x, mul(c, y, p), p);
            }
        }
        match r.iter().position(|&x| x != 0) {
            None => return ModPolynomial::new(p, q),
            Some(pivot) => {
                let s = inv(r[pivot], p);
                r.iter_mut().for_each(|x| *x = mul(*x, s, p));
                q.iter_mut().for_each(|x| *x = mul(*x, s, p));
                rows.push(Row {
                    pivot,
                    vec: r,
                    poly: q,
                });
            }
        }
        krylov = a.mul_vec(&krylov);
    }
    unreachable!("more than n independent Krylov vectors")
}

/// Minimal polynomial of `A` modulo `p`.
///
/// Scans `e_1, e_2, ...`; whenever the running LCM does not annihilate the
/// current basis vector, it is multiplied by that vector's minimal
/// polynomial. The result is then certified by checking `m(A) e_k = 0`
/// for every `k`.
pub fn minpoly_mod(a: &ModMatrix) -> Result<ModPolynomial> {
    let (n, p) = (a.n, a.p);
    let mut m = ModPolynomial::one(p);
    let mut e = vec![0u64; n];
    for k in 0..n {
        e[k] = 1;
        if m.apply(a, &e).iter().any(|&x| x != 0) {
            m = m.lcm(&vector_minpoly(a, &e));
        }
        e[k] = 0;
    }
    if !m.annihilates(a) {
        return Err(Error::Verification(format!(
            "modular minimal polynomial does not annihilate A mod {p}"
        )));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::tests_support::example5;
    use crate::poly::IntPolynomial;

    fn mp(p: u64, c: &[u64]) -> ModPolynomial {
        ModPolynomial::new(p, c.to_vec())
    }

    fn jordan_zero(n: usize) -> IntegerMatrix {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(j == i + 1)).collect())
            .collect();
        IntegerMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn reduction_examples() {
        let a = IntegerMatrix::from_rows(&[[-1]]).unwrap();
        assert_eq!(reduce_mod(&a, 5).entries(), &[4]);
        let r = reduce_mod(&example5(), 3);
        assert!(r.entries().iter().all(|&x| x == 1 || x == 2));
        let a = IntegerMatrix::from_rows(&[[7, 0], [0, 7]]).unwrap();
        assert!(reduce_mod(&a, 7).is_zero());
    }

    #[test]
    fn charpoly_examples() {
        let id = reduce_mod(&IntegerMatrix::identity(3), 5);
        assert_eq!(charpoly_mod(&id), mp(5, &[4, 3, 2, 1]));

        let a = reduce_mod(&example5(), 101);
        assert_eq!(charpoly_mod(&a), mp(101, &[48, 21, 40, 0, 96, 1]));

        for c in [-9i64, 0, 4, 13] {
            let a = reduce_mod(&IntegerMatrix::from_rows(&[[c]]).unwrap(), 11);
            let expected = ModPolynomial::from_int(&IntPolynomial::from_i64(&[-c, 1]), 11);
            assert_eq!(charpoly_mod(&a), expected);
        }
    }

    #[test]
    fn charpoly_with_zero_pivots() {
        // Needs a row swap during the Hessenberg reduction.
        let a = IntegerMatrix::from_rows(&[[1, 2, 3, 4], [0, 5, 6, 7], [2, 0, 0, 1], [3, 1, 0, 2]])
            .unwrap();
        let cp = charpoly_mod(&reduce_mod(&a, 1_000_003));
        assert_eq!(cp.degree(), Some(4));
        assert!(cp.annihilates(&reduce_mod(&a, 1_000_003)));
    }

    #[test]
    fn minpoly_examples() {
        let id = reduce_mod(&IntegerMatrix::identity(4), 7);
        assert_eq!(minpoly_mod(&id).unwrap(), mp(7, &[6, 1]));

        let j = reduce_mod(&jordan_zero(3), 5);
        assert_eq!(minpoly_mod(&j).unwrap(), mp(5, &[0, 0, 0, 1]));

        let a = reduce_mod(&example5(), 101);
        let m = minpoly_mod(&a).unwrap();
        let cp = charpoly_mod(&a);
        assert!(cp.div_rem(&m).1.is_zero());
        assert!(m.annihilates(&a));
    }

    #[test]
    fn minpoly_of_zero_matrix() {
        let z = reduce_mod(&IntegerMatrix::zeros(3), 13);
        assert_eq!(minpoly_mod(&z).unwrap(), mp(13, &[0, 1]));
    }

    #[test]
    fn polynomial_gcd_lcm() {
        let p = 13;
        // (X-1)(X-2) and (X-2)(X-3)
        let a = mp(p, &[2, 10, 1]);
        let b = mp(p, &[6, 8, 1]);
        assert_eq!(a.gcd(&b), mp(p, &[11, 1]));
        let l = a.lcm(&b);
        assert_eq!(l.degree(), Some(3));
        assert!(l.div_rem(&a).1.is_zero() && l.div_rem(&b).1.is_zero());
    }

    #[test]
    fn works_mod_two() {
        let a = reduce_mod(&example5(), 2);
        let cp = charpoly_mod(&a);
        assert_eq!(
            cp,
            ModPolynomial::from_int(&IntPolynomial::from_i64(&[48, -80, 40, 0, -5, 1]), 2)
        );
        let m = minpoly_mod(&a).unwrap();
        assert!(cp.div_rem(&m).1.is_zero());
    }
}
