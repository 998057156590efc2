//! Dense integer polynomials.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntegerMatrix;

/// Polynomial with arbitrary-precision integer coefficients; `coeffs[k]`
/// multiplies `X^k`. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Largest absolute coefficient (0 for the zero polynomial).
    pub fn infinity_norm(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Whether `p(A) = 0` over the integers. Evaluates `p(A) e_k` for every
    /// basis vector by Horner's rule, so the matrix power is never formed.
    pub fn annihilates(&self, a: &IntegerMatrix) -> bool {
        let n = a.n();
        if self.is_zero() {
            return true;
        }
        (0..n).all(|k| {
            let mut acc = vec![BigInt::zero(); n];
            for c in self.coeffs.iter().rev() {
                acc = a.mul_vec(&acc);
                acc[k] += c;
            }
            acc.iter().all(Zero::is_zero)
        })
    }

    /// Quotient and remainder by a monic divisor.
    ///
    /// Panics if `divisor` is not monic.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (IntPolynomial::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dd].clone();
            if q.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (IntPolynomial::new(quot), IntPolynomial::new(rem))
    }

    /// Makes the content 1 and the leading coefficient positive.
    pub fn primitive(&self) -> IntPolynomial {
        let g = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return IntPolynomial::zero();
        }
        let sign = if self.leading().is_some_and(Signed::is_negative) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        IntPolynomial::new(self.coeffs.iter().map(|c| c / &g * &sign).collect())
    }
}

/// Descending powers with explicit `*` and `^`; zero terms omitted; the zero
/// polynomial renders as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let monomial = match k {
                0 => None,
                1 => Some("X".to_string()),
                _ => Some(format!("X^{k}")),
            };
            match monomial {
                None => write!(f, "{mag}")?,
                Some(m) if mag.is_one() => f.write_str(&m)?,
                Some(m) => write!(f, "{mag}*{m}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePolynomialError(pub String);

impl fmt::Display for ParsePolynomialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid polynomial: {}", self.0)
    }
}

impl std::error::Error for ParsePolynomialError {}

/// Parses the rendering produced by `Display` (whitespace-insensitive).
impl FromStr for IntPolynomial {
    type Err = ParsePolynomialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParsePolynomialError("empty input".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-BigInt::one(), &term[1..]),
                Some(b'+') => (BigInt::one(), &term[1..]),
                _ => (BigInt::one(), term),
            };
            let bad = || ParsePolynomialError(format!("bad term '{term}'"));
            let (coeff, power) = match body.find('X') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let coeff = match &body[..pos] {
                        "" => BigInt::one(),
                        c => c
                            .strip_suffix('*')
                            .ok_or_else(bad)?
                            .parse::<BigInt>()
                            .map_err(|_| bad())?,
                    };
                    let power = match &body[pos + 1..] {
                        "" => 1,
                        p => p
                            .strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<usize>()
                            .map_err(|_| bad())?,
                    };
                    (coeff, power)
                }
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += sign * coeff;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalizes_zero() {
        assert!(IntPolynomial::from_i64(&[0, 0, 0]).is_zero());
        assert_eq!(IntPolynomial::from_i64(&[]).degree(), None);
        assert_eq!(IntPolynomial::from_i64(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn renders() {
        let p = IntPolynomial::from_i64(&[48, -80, 40, 0, -5, 1]);
        assert_eq!(p.to_string(), "X^5 - 5*X^4 + 40*X^2 - 80*X + 48");
        assert_eq!(IntPolynomial::from_i64(&[-1, 1]).to_string(), "X - 1");
        assert_eq!(IntPolynomial::from_i64(&[0, 0, 0, -1]).to_string(), "-X^3");
        assert_eq!(IntPolynomial::from_i64(&[7]).to_string(), "7");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn infinity_norm_matches_scan() {
        let p = IntPolynomial::from_i64(&[48, -80, 40, 0, -5, 1]);
        assert_eq!(p.infinity_norm(), BigInt::from(80));
        assert_eq!(IntPolynomial::zero().infinity_norm(), BigInt::zero());
    }

    #[test]
    fn division_by_monic() {
        // (X-1)(X-2)(X+3) = X^3 - 7X + 6
        let p = IntPolynomial::from_i64(&[6, -7, 0, 1]);
        let (q, r) = p.div_rem_monic(&IntPolynomial::from_i64(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, IntPolynomial::from_i64(&[-6, 1, 1]));
        let (_, r) = p.div_rem_monic(&IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(r, IntPolynomial::from_i64(&[12]));
    }

    #[test]
    fn annihilation() {
        let id = IntegerMatrix::identity(3);
        assert!(IntPolynomial::from_i64(&[-1, 1]).annihilates(&id));
        assert!(!IntPolynomial::from_i64(&[-2, 1]).annihilates(&id));
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(c in proptest::collection::vec(-1000i64..1000, 0..8)) {
            let p = IntPolynomial::from_i64(&c);
            let q: IntPolynomial = p.to_string().parse().unwrap();
            prop_assert_eq!(p, q);
        }
    }
}
