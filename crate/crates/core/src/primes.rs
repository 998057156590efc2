//! Deterministic prime sources for modular imaging.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Miller-Rabin with the first twelve prime bases, which is exact for all
/// 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^bitsize` in descending order, skipping an excluded set.
#[derive(Debug, Clone)]
pub struct PrimeStream {
    bitsize: u32,
    /// Next candidate to test; 0 once exhausted.
    cursor: u64,
    excluded: BTreeSet<u64>,
}

impl PrimeStream {
    pub fn bitsize(&self) -> u32 {
        self.bitsize
    }

    /// Like `next`, but reports exhaustion as an error.
    pub fn next_prime(&mut self) -> Result<u64> {
        self.next().ok_or(Error::PrimesExhausted {
            bitsize: self.bitsize,
        })
    }

    /// Adds a prime to the excluded set; it will not be yielded later.
    pub fn exclude(&mut self, p: u64) {
        self.excluded.insert(p);
    }
}

impl Iterator for PrimeStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.cursor >= 2 {
            let candidate = self.cursor;
            self.cursor -= 1;
            if is_prime(candidate) && !self.excluded.contains(&candidate) {
                return Some(candidate);
            }
        }
        None
    }
}

/// Stream of primes below `2^bitsize`, largest first. `bitsize` must lie in
/// `2..=62`.
pub fn prime_stream(bitsize: u32, excluded: impl IntoIterator<Item = u64>) -> Result<PrimeStream> {
    if !(2..=62).contains(&bitsize) {
        return Err(Error::InvalidBitSize(bitsize));
    }
    Ok(PrimeStream {
        bitsize,
        cursor: (1u64 << bitsize) - 1,
        excluded: excluded.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn small_streams() {
        let all: Vec<u64> = prime_stream(3, []).unwrap().collect();
        assert_eq!(all, vec![7, 5, 3, 2]);
        let some: Vec<u64> = prime_stream(3, [5]).unwrap().collect();
        assert_eq!(some, vec![7, 3, 2]);
    }

    #[test]
    fn mersenne_31() {
        let mut s = prime_stream(31, []).unwrap();
        assert_eq!(s.next_prime().unwrap(), 2_147_483_647);
        assert!(trial_division(2_147_483_647));
    }

    #[test]
    fn top_of_range() {
        let mut s = prime_stream(62, []).unwrap();
        let p = s.next_prime().unwrap();
        assert!(p < 1 << 62);
        assert!(is_prime(p));
        assert!(((p + 1)..(1 << 62)).all(|c| !is_prime(c)));
    }

    #[test]
    fn exhaustion_and_bad_bitsize() {
        let mut s = prime_stream(2, []).unwrap();
        assert_eq!(s.next_prime().unwrap(), 3);
        assert_eq!(s.next_prime().unwrap(), 2);
        assert_eq!(s.next_prime(), Err(Error::PrimesExhausted { bitsize: 2 }));
        assert_eq!(prime_stream(1, []).unwrap_err(), Error::InvalidBitSize(1));
        assert_eq!(prime_stream(63, []).unwrap_err(), Error::InvalidBitSize(63));
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in 0..5000u64 {
            assert_eq!(is_prime(n), trial_division(n), "{n}");
        }
        // strong pseudoprimes to several small bases
        for n in [
            3_215_031_751u64,
            3_825_123_056_546_413_051,
            341_550_071_728_321,
        ] {
            assert!(!is_prime(n));
        }
    }
}
