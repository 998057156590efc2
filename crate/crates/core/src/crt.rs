//! Prime budgeting, Chinese remaindering with symmetric lifting, and the
//! bound-driven reconstruction of characteristic and minimal polynomials.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bound::CoeffBound;
use crate::charpoly_bounds::windowed_search_bound;
use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;
use crate::minpoly_bounds::best_minpoly_bound;
use crate::modular::{charpoly_mod, minpoly_mod, reduce_mod, ModPolynomial};
use crate::poly::IntPolynomial;
use crate::primes::{prime_stream, PrimeStream};

/// Default size of the primes drawn for modular images.
pub const DEFAULT_PRIME_BITS: u32 = 31;

/// Base-2 logarithm of a positive big integer, accurate to f64 precision.
pub fn log2_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 64 {
        return x
            .to_u64()
            .expect("fits in u64")
            .to_f64()
            .expect("finite")
            .log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 bits");
    (top as f64).log2() + shift as f64
}

/// Whether `product > 2^(bits + 1)`, i.e. whether every integer of
/// absolute value at most `2^bits` has a unique symmetric residue.
pub fn product_covers(product: &BigUint, bits: f64) -> bool {
    let exponent = bits + 1.0;
    if exponent.fract() == 0.0 && exponent < 1e9 {
        return *product > BigUint::one() << (exponent as u64);
    }
    log2_biguint(product) > exponent
}

/// Primes chosen for a Chinese remaindering, with their product.
#[derive(Debug, Clone, PartialEq)]
pub struct CrtPlan {
    pub bound: CoeffBound,
    pub primes: Vec<u64>,
    pub product: BigUint,
}

/// Takes primes from the stream until their product exceeds
/// `2^(bound.bits + 1)`.
pub fn plan_from_stream(bound: &CoeffBound, stream: &mut PrimeStream) -> Result<CrtPlan> {
    let mut primes = Vec::new();
    let mut product = BigUint::one();
    while !product_covers(&product, bound.bits) {
        let p = stream.next_prime()?;
        product *= p;
        primes.push(p);
    }
    Ok(CrtPlan {
        bound: bound.clone(),
        primes,
        product,
    })
}

/// Minimal prefix of the descending prime stream below `2^bitsize` whose
/// product exceeds `2^(bound.bits + 1)`.
pub fn plan_primes(bound: &CoeffBound, bitsize: u32) -> Result<CrtPlan> {
    plan_from_stream(bound, &mut prime_stream(bitsize, [])?)
}

fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Precomputed Garner data for a fixed list of pairwise coprime moduli.
#[derive(Debug, Clone)]
pub struct CrtBasis {
    moduli: Vec<u64>,
    /// `inverses[i] = (m_0 ... m_{i-1})^{-1} mod m_i`.
    inverses: Vec<u64>,
    product: BigUint,
}

impl CrtBasis {
    pub fn new(moduli: &[u64]) -> Result<Self> {
        let mut inverses = Vec::with_capacity(moduli.len());
        for (i, &m) in moduli.iter().enumerate() {
            if m < 2 {
                return Err(Error::UnreducedResidue {
                    value: 0,
                    modulus: m,
                });
            }
            let mut prefix = 1 % m;
            for &earlier in &moduli[..i] {
                if earlier.gcd(&m) != 1 {
                    return Err(Error::NonCoprimeModuli(earlier, m));
                }
                prefix = ((prefix as u128 * earlier as u128) % m as u128) as u64;
            }
            inverses.push(inverse_mod(prefix, m).expect("coprime prefix"));
        }
        let product = moduli.iter().fold(BigUint::one(), |acc, &m| acc * m);
        Ok(CrtBasis {
            moduli: moduli.to_vec(),
            inverses,
            product,
        })
    }

    pub fn product(&self) -> &BigUint {
        &self.product
    }

    /// The unique `x` in `(-M/2, M/2]` congruent to `residues[i]` modulo
    /// `moduli[i]` for every `i`.
    pub fn combine(&self, residues: &[u64]) -> Result<BigInt> {
        assert_eq!(residues.len(), self.moduli.len());
        let mut digits: Vec<u64> = Vec::with_capacity(residues.len());
        for (i, (&r, &m)) in residues.iter().zip(&self.moduli).enumerate() {
            if r >= m {
                return Err(Error::UnreducedResidue {
                    value: r,
                    modulus: m,
                });
            }
            // mixed-radix value of the digits so far, reduced mod m
            let mut t: u128 = 0;
            for j in (0..i).rev() {
                t = (t * self.moduli[j] as u128 + digits[j] as u128) % m as u128;
            }
            let diff = (r as u128 + m as u128 - t) % m as u128;
            digits.push(((diff * self.inverses[i] as u128) % m as u128) as u64);
        }
        let mut x = BigUint::zero();
        for (j, &d) in digits.iter().enumerate().rev() {
            x = x * self.moduli[j] + d;
        }
        Ok(symmetric_lift(x, &self.product))
    }
}

/// Maps `x` in `[0, M)` to its representative in `(-M/2, M/2]`.
pub fn symmetric_lift(x: BigUint, modulus: &BigUint) -> BigInt {
    if &x * 2u32 > *modulus {
        BigInt::from(x) - BigInt::from(modulus.clone())
    } else {
        BigInt::from(x)
    }
}

/// Chinese remaindering of `(residue, modulus)` pairs with symmetric lift.
pub fn crt_combine(residues: &[(u64, u64)]) -> Result<BigInt> {
    let moduli: Vec<u64> = residues.iter().map(|&(_, m)| m).collect();
    let values: Vec<u64> = residues.iter().map(|&(r, _)| r).collect();
    CrtBasis::new(&moduli)?.combine(&values)
}

/// Knobs for the modular pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComputeOptions {
    /// Primes are drawn below `2^prime_bits`, largest first.
    pub prime_bits: u32,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions {
            prime_bits: DEFAULT_PRIME_BITS,
        }
    }
}

fn lift_images(images: &[(u64, ModPolynomial)], len: usize) -> Result<IntPolynomial> {
    let moduli: Vec<u64> = images.iter().map(|(p, _)| *p).collect();
    let basis = CrtBasis::new(&moduli)?;
    let coeffs = (0..len)
        .map(|k| {
            let residues: Vec<u64> = images.iter().map(|(_, img)| img.coeff(k)).collect();
            basis.combine(&residues)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::new(coeffs))
}

/// Result of [`reconstruct_charpoly_with_report`].
#[derive(Debug, Clone)]
pub struct CharpolyReport {
    pub poly: IntPolynomial,
    pub plan: CrtPlan,
}

/// Characteristic polynomial `det(XI - A)` from modular images.
///
/// The prime budget comes from the windowed minor bound, so the result is
/// exact without any a-posteriori check.
pub fn reconstruct_charpoly_with_report(
    a: &IntegerMatrix,
    opts: ComputeOptions,
) -> Result<CharpolyReport> {
    let n = a.n();
    let bound = windowed_search_bound(n, a.max_abs_f64()).with_planning_slack(n);
    let plan = plan_primes(&bound, opts.prime_bits)?;
    let images: Vec<(u64, ModPolynomial)> = plan
        .primes
        .par_iter()
        .map(|&p| (p, charpoly_mod(&reduce_mod(a, p))))
        .collect();
    let poly = lift_images(&images, n + 1)?;
    debug_assert!(poly.is_monic() && poly.degree() == Some(n));
    Ok(CharpolyReport { poly, plan })
}

pub fn reconstruct_charpoly(a: &IntegerMatrix, opts: ComputeOptions) -> Result<IntPolynomial> {
    Ok(reconstruct_charpoly_with_report(a, opts)?.poly)
}

/// Result of [`reconstruct_minpoly_with_report`].
#[derive(Debug, Clone)]
pub struct MinpolyReport {
    pub poly: IntPolynomial,
    /// Bound used for the final (successful) reconstruction.
    pub bound: CoeffBound,
    /// Primes whose images were combined.
    pub primes: Vec<u64>,
    /// Primes whose images had too low a degree.
    pub discarded: Vec<u64>,
    /// Number of reconstruction attempts, 1 when the first one verified.
    pub attempts: usize,
}

struct MinpolyImages<'a> {
    a: &'a IntegerMatrix,
    stream: PrimeStream,
    degree: usize,
    kept: Vec<(u64, ModPolynomial)>,
    discarded: Vec<u64>,
}

impl MinpolyImages<'_> {
    /// Folds freshly computed images in prime order, keeping only those of
    /// the largest degree seen so far.
    fn absorb(&mut self, batch: Vec<(u64, ModPolynomial)>) -> bool {
        let mut grew = false;
        for (p, img) in batch {
            let deg = img.degree().expect("minimal polynomial is nonzero");
            if deg > self.degree {
                self.degree = deg;
                grew = true;
                self.discarded.extend(self.kept.drain(..).map(|(q, _)| q));
                self.kept.push((p, img));
            } else if deg == self.degree {
                self.kept.push((p, img));
            } else {
                self.discarded.push(p);
            }
        }
        grew
    }

    fn compute(&mut self, count: usize) -> Result<Vec<(u64, ModPolynomial)>> {
        let primes = (0..count)
            .map(|_| self.stream.next_prime())
            .collect::<Result<Vec<_>>>()?;
        let a = self.a;
        primes
            .into_par_iter()
            .map(|p| Ok((p, minpoly_mod(&reduce_mod(a, p))?)))
            .collect()
    }

    fn kept_product(&self) -> BigUint {
        self.kept
            .iter()
            .fold(BigUint::one(), |acc, (p, _)| acc * *p)
    }
}

/// Minimal polynomial over the integers from modular images.
///
/// The degree `d` is learned from the images; images of lower degree than
/// the largest seen come from bad primes and are dropped. Once enough
/// images of degree `d` cover the minimal polynomial bound for `d`, they
/// are combined and the candidate is checked with `m(A) = 0` over the
/// integers. A failed check means every image so far had a deficient
/// degree, so primes are drawn until the degree grows and the process
/// repeats; this happens at most `n` times.
pub fn reconstruct_minpoly_with_report(
    a: &IntegerMatrix,
    opts: ComputeOptions,
) -> Result<MinpolyReport> {
    let n = a.n();
    let mut images = MinpolyImages {
        a,
        stream: prime_stream(opts.prime_bits, [])?,
        degree: 0,
        kept: Vec::new(),
        discarded: Vec::new(),
    };
    let first = images.compute(1)?;
    images.absorb(first);
    let bits_per_prime = (opts.prime_bits - 1).max(1) as f64;
    let mut attempts = 0;
    loop {
        attempts += 1;
        let bound = loop {
            let bound = best_minpoly_bound(a, images.degree)?.with_planning_slack(n);
            let product = images.kept_product();
            if product_covers(&product, bound.bits) {
                break bound;
            }
            let deficit = bound.bits + 1.0 - log2_biguint(&product).max(0.0);
            let count = (deficit / bits_per_prime).ceil().max(1.0) as usize;
            let batch = images.compute(count)?;
            images.absorb(batch);
        };
        let poly = lift_images(&images.kept, images.degree + 1)?;
        if poly.is_monic() && poly.degree() == Some(images.degree) && poly.annihilates(a) {
            return Ok(MinpolyReport {
                poly,
                bound,
                primes: images.kept.iter().map(|(p, _)| *p).collect(),
                discarded: images.discarded,
                attempts,
            });
        }
        if images.degree >= n {
            return Err(Error::Verification(
                "degree-n candidate failed to annihilate the matrix".into(),
            ));
        }
        loop {
            let batch = images.compute(1)?;
            if images.absorb(batch) {
                break;
            }
        }
    }
}

pub fn reconstruct_minpoly(a: &IntegerMatrix, opts: ComputeOptions) -> Result<IntPolynomial> {
    Ok(reconstruct_minpoly_with_report(a, opts)?.poly)
}
