//! Spectral-radius estimates and the coefficient bounds for the minimal
//! polynomial built on them.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::bound::{BoundMeta, BoundMethod, CoeffBound};
use crate::charpoly_bounds::windowed_search_bound;
use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

/// Above this dimension the Cassini pair scan is replaced by a bound from
/// the two largest diagonal magnitudes and the two largest radii.
pub const CASSINI_PAIR_SCAN_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectralMethod {
    GershgorinRow,
    GershgorinCol,
    CassiniRow,
    CassiniCol,
    Combined,
}

impl SpectralMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectralMethod::GershgorinRow => "gershgorin-row",
            SpectralMethod::GershgorinCol => "gershgorin-col",
            SpectralMethod::CassiniRow => "cassini-row",
            SpectralMethod::CassiniCol => "cassini-col",
            SpectralMethod::Combined => "combined",
        }
    }
}

/// Upper bound on the spectral radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralBound {
    pub beta: f64,
    pub method: SpectralMethod,
}

fn to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

fn diag_abs(a: &IntegerMatrix) -> Vec<f64> {
    (0..a.n()).map(|i| to_f64(&a.get(i, i).abs())).collect()
}

fn smaller(x: SpectralBound, y: SpectralBound) -> SpectralBound {
    if y.beta < x.beta {
        y
    } else {
        x
    }
}

/// Smaller of the row and column Gershgorin radii `max_i (|a_ii| + R_i)`.
pub fn gershgorin_bound(a: &IntegerMatrix) -> SpectralBound {
    let s = a.stats();
    let max_of = |v: &[BigInt]| v.iter().map(to_f64).fold(0.0, f64::max);
    let row = SpectralBound {
        beta: max_of(&s.row_abs_sums),
        method: SpectralMethod::GershgorinRow,
    };
    let col = SpectralBound {
        beta: max_of(&s.col_abs_sums),
        method: SpectralMethod::GershgorinCol,
    };
    smaller(row, col)
}

/// Largest root of `(x - a)(x - b) = r`.
fn oval_reach(a: f64, b: f64, r: f64) -> f64 {
    let half_diff = (a - b) / 2.0;
    (a + b) / 2.0 + (half_diff * half_diff + r).sqrt()
}

fn top_two(values: &[f64]) -> (f64, f64) {
    values.iter().fold((0.0, 0.0), |(first, second), &v| {
        if v >= first {
            (v, first)
        } else if v > second {
            (first, v)
        } else {
            (first, second)
        }
    })
}

fn cassini_reach(diag: &[f64], radii: &[f64]) -> f64 {
    let n = diag.len();
    if n == 1 {
        return diag[0];
    }
    if n > CASSINI_PAIR_SCAN_LIMIT {
        let (d1, d2) = top_two(diag);
        let (r1, r2) = top_two(radii);
        return oval_reach(d1, d2, r1 * r2);
    }
    let mut best = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            best = best.max(oval_reach(diag[i], diag[j], radii[i] * radii[j]));
        }
    }
    best
}

/// Farthest point from the origin of the union of Cassini ovals
/// `|z - a_ii| |z - a_jj| <= R_i R_j`, row and column variants, whichever
/// is smaller. For `n = 1` this is `|a_11|`.
pub fn cassini_bound(a: &IntegerMatrix) -> SpectralBound {
    let s = a.stats();
    let diag = diag_abs(a);
    let rows: Vec<f64> = s.off_diag_row_sums.iter().map(to_f64).collect();
    let cols: Vec<f64> = s.off_diag_col_sums.iter().map(to_f64).collect();
    let row = SpectralBound {
        beta: cassini_reach(&diag, &rows),
        method: SpectralMethod::CassiniRow,
    };
    let col = SpectralBound {
        beta: cassini_reach(&diag, &cols),
        method: SpectralMethod::CassiniCol,
    };
    smaller(row, col)
}

/// Minimum of the Gershgorin and Cassini estimates.
pub fn spectral_radius_bound(a: &IntegerMatrix) -> SpectralBound {
    let beta = gershgorin_bound(a).beta.min(cassini_bound(a).beta);
    SpectralBound {
        beta,
        method: SpectralMethod::Combined,
    }
}

/// Bound on the coefficients of a degree-`d` polynomial whose roots have
/// modulus at most `beta`:
///
/// * `beta^d` when `d <= beta`,
/// * otherwise `min(sqrt(beta d)^d, sqrt(2 / (d pi)) 2^d beta^d)`.
///
/// `beta` is clamped to at least 1.
pub fn spectral_coeff_bound(beta: f64, d: usize) -> Result<CoeffBound> {
    if d == 0 {
        return Err(Error::InvalidDegree { degree: d, n: 0 });
    }
    let beta = beta.max(1.0);
    let df = d as f64;
    let log2_beta = beta.log2();
    let bits = if df <= beta {
        df * log2_beta
    } else {
        let geometric = df / 2.0 * (beta * df).log2();
        let central = 0.5 * (2.0 / (df * PI)).log2() + df + df * log2_beta;
        geometric.min(central)
    };
    Ok(
        CoeffBound::new(bits, BoundMethod::Spectral).with_meta(BoundMeta {
            beta: Some(beta),
            degree: Some(d),
            ..BoundMeta::default()
        }),
    )
}

/// Mignotte's factor bound: a degree-`d` factor has coefficients at most
/// `2^d` times the characteristic polynomial bound.
pub fn mignotte_bound(charpoly: &CoeffBound, d: usize, n: usize) -> Result<CoeffBound> {
    if d == 0 || d > n {
        return Err(Error::InvalidDegree { degree: d, n });
    }
    Ok(
        CoeffBound::new(charpoly.bits + d as f64, BoundMethod::Mignotte).with_meta(BoundMeta {
            degree: Some(d),
            ..BoundMeta::default()
        }),
    )
}

/// The smaller of the spectral and Mignotte bounds for a minimal
/// polynomial of degree `d`; `meta.winner` records which one it was.
pub fn best_minpoly_bound(a: &IntegerMatrix, d: usize) -> Result<CoeffBound> {
    let n = a.n();
    if d == 0 || d > n {
        return Err(Error::InvalidDegree { degree: d, n });
    }
    let beta = spectral_radius_bound(a).beta;
    let spectral = spectral_coeff_bound(beta, d)?;
    let mignotte = mignotte_bound(&windowed_search_bound(n, a.max_abs_f64()), d, n)?;
    let mut best = if spectral.bits <= mignotte.bits {
        spectral
    } else {
        mignotte
    };
    best.meta.winner = Some(best.method);
    best.meta.beta = Some(beta.max(1.0));
    best.meta.degree = Some(d);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::tests_support::example5;

    fn max_binomial_term(beta: u64, d: u32) -> f64 {
        let mut best = 0f64;
        let mut binom = 1f64;
        for i in 0..=d {
            if i > 0 {
                binom = binom * (d - i + 1) as f64 / i as f64;
            }
            best = best.max(binom * (beta as f64).powi((d - i) as i32));
        }
        best
    }

    #[test]
    fn gershgorin_examples() {
        assert_eq!(gershgorin_bound(&IntegerMatrix::identity(3)).beta, 1.0);
        assert_eq!(
            gershgorin_bound(&IntegerMatrix::diagonal(&[2, -7, 3])).beta,
            7.0
        );
        assert_eq!(gershgorin_bound(&example5()).beta, 5.0);
    }

    #[test]
    fn gershgorin_picks_smaller_side() {
        let a = IntegerMatrix::from_rows(&[[1, 10], [0, 1]]).unwrap();
        // rows: 11, 1 -> 11; cols: 1, 11 -> 11; equal here.
        assert_eq!(gershgorin_bound(&a).beta, 11.0);
        let a = IntegerMatrix::from_rows(&[[1, 5, 5], [0, 1, 0], [0, 0, 1]]).unwrap();
        let g = gershgorin_bound(&a);
        assert_eq!(g.beta, 6.0);
        assert_eq!(g.method, SpectralMethod::GershgorinCol);
    }

    #[test]
    fn cassini_examples() {
        assert_eq!(cassini_bound(&IntegerMatrix::identity(3)).beta, 1.0);
        assert_eq!(cassini_bound(&example5()).beta, 5.0);
        assert_eq!(
            cassini_bound(&IntegerMatrix::diagonal(&[2, -7, 3])).beta,
            7.0
        );
        assert_eq!(
            cassini_bound(&IntegerMatrix::from_rows(&[[-9]]).unwrap()).beta,
            9.0
        );
    }

    #[test]
    fn cassini_can_beat_gershgorin() {
        // Row radii 4 and 1 around centers 0 and 10.
        let a = IntegerMatrix::from_rows(&[[0, 4], [1, 10]]).unwrap();
        let c = cassini_bound(&a).beta;
        assert!(c < gershgorin_bound(&a).beta);
        assert!((c - (5.0 + 29f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn shortcut_dominates_pair_scan() {
        let diag = [3.0, 1.0, 7.0, 2.0, 0.0];
        let radii = [2.0, 9.0, 1.0, 4.0, 6.0];
        let (d1, d2) = top_two(&diag);
        let (r1, r2) = top_two(&radii);
        assert!(oval_reach(d1, d2, r1 * r2) >= cassini_reach(&diag, &radii));
    }

    #[test]
    fn combined_is_minimum() {
        let a = IntegerMatrix::from_rows(&[[0, 4], [1, 10]]).unwrap();
        let s = spectral_radius_bound(&a);
        assert_eq!(s.method, SpectralMethod::Combined);
        assert!(s.beta <= gershgorin_bound(&a).beta);
        assert!(s.beta <= cassini_bound(&a).beta);
    }

    #[test]
    fn spectral_coeff_examples() {
        let b = spectral_coeff_bound(3.0, 2).unwrap();
        assert!((b.value() - 9.0).abs() < 1e-9);
        assert_eq!(max_binomial_term(3, 2), 9.0);

        let b = spectral_coeff_bound(1.0, 4).unwrap();
        assert!((b.value() - 6.3831).abs() < 1e-3);
        assert!(max_binomial_term(1, 4) <= b.value());

        let b = spectral_coeff_bound(2.0, 8).unwrap();
        let central = (2.0 / (8.0 * PI)).sqrt() * 65536.0;
        assert!((b.value() - central).abs() < 1e-6);
        assert_eq!(max_binomial_term(2, 8), 1792.0);

        // beta < 1 behaves as beta = 1
        assert_eq!(spectral_coeff_bound(0.0, 1).unwrap().bits, 0.0);
        assert!(spectral_coeff_bound(2.0, 0).is_err());
    }

    #[test]
    fn boundary_uses_first_branch() {
        for beta in 1..=16u32 {
            let b = spectral_coeff_bound(beta as f64, beta as usize).unwrap();
            assert!((b.bits - beta as f64 * (beta as f64).log2()).abs() < 1e-12);
            assert!(max_binomial_term(beta as u64, beta) <= b.value() * (1.0 + 1e-12));
        }
    }

    #[test]
    fn mignotte_examples() {
        let cp = CoeffBound::new(80.66661f64.log2(), BoundMethod::ClosedForm);
        let m = mignotte_bound(&cp, 5, 5).unwrap();
        assert!((m.bits - 11.334).abs() < 1e-3);
        let m = mignotte_bound(&CoeffBound::new(0.0, BoundMethod::Hadamard), 1, 3).unwrap();
        assert_eq!(m.bits, 1.0);
        assert!(mignotte_bound(&cp, 0, 5).is_err());
        assert!(mignotte_bound(&cp, 6, 5).is_err());
    }

    #[test]
    fn best_minpoly_examples() {
        let b = best_minpoly_bound(&example5(), 5).unwrap();
        assert_eq!(b.meta.winner, Some(BoundMethod::Mignotte));
        assert!((b.value() - 2560.0).abs() < 1e-6);
        let spectral = spectral_coeff_bound(5.0, 5).unwrap();
        assert!((spectral.value() - 3125.0).abs() < 1e-6);

        let b = best_minpoly_bound(&IntegerMatrix::identity(10), 1).unwrap();
        assert_eq!(b.meta.winner, Some(BoundMethod::Spectral));
        assert_eq!(b.bits, 0.0);

        let b = best_minpoly_bound(&IntegerMatrix::zeros(5), 1).unwrap();
        assert_eq!(b.bits, 0.0);
        assert!(best_minpoly_bound(&IntegerMatrix::zeros(5), 6).is_err());
    }
}
