//! Bounds on the largest coefficient of the characteristic polynomial.
//!
//! The coefficient of `X^j` in `det(XI - A)` is, up to sign, a sum of the
//! `C(n, j)` diagonal minors of order `n - j`. Hadamard's inequality bounds
//! each of them, so `|c_j| <= F(n, j) = C(n, j) * sqrt((n - j) B^2)^(n - j)`.
//! Everything here works with `log2 F(n, j)`.
//!
//! `B <= 1` is accepted throughout; `log2(B^2)` is then taken as 0.

use crate::bound::{BoundMeta, BoundMethod, CoeffBound};
use crate::error::{Error, Result};

/// Additive constant of the closed-form bound. It must exceed
/// `(5/6) log2 5 - (2/3) log2 6 = 0.21163174...`, the value attained at
/// `n = 6, j = 1`.
pub const CLOSED_FORM_CONSTANT: f64 = 0.2116318;

/// Constant of the search window for the largest minor term.
pub const WINDOW_DELTA: f64 = 5.418236;

/// Smallest dimension for which the closed form and the half-range
/// symmetry argument hold.
pub const CLOSED_FORM_MIN_DIM: usize = 4;

fn log2_b_sq(b: f64) -> f64 {
    if b <= 1.0 {
        0.0
    } else {
        2.0 * b.log2()
    }
}

/// `(k / 2) log2 k`, with the `k = 0` term equal to 0.
fn half_k_log2_k(k: usize) -> f64 {
    if k == 0 {
        0.0
    } else {
        k as f64 / 2.0 * (k as f64).log2()
    }
}

/// Hadamard's bound on `|det(A)|`: `(n/2) log2(n B^2)` bits, 0 for the zero
/// matrix.
pub fn hadamard_bound(n: usize, b: f64) -> CoeffBound {
    if b == 0.0 {
        return CoeffBound::new(0.0, BoundMethod::Hadamard);
    }
    let bits = n as f64 / 2.0 * ((n as f64).log2() + log2_b_sq(b));
    CoeffBound::new(bits, BoundMethod::Hadamard)
}

/// Successive values `log2 F(n, 0), log2 F(n, 1), ...` produced by the
/// one-step recurrence
///
/// ```text
/// log F(n, j+1) = log F(n, j) - log B + log((n-j)/(j+1))
///                 + ((n-j-1)/2) log(n-j-1) - ((n-j)/2) log(n-j)
/// ```
#[derive(Debug, Clone)]
pub struct MinorTerms {
    n: usize,
    log2_b: f64,
    next_j: usize,
    current: f64,
}

impl MinorTerms {
    pub fn new(n: usize, b: f64) -> Self {
        let log2_b = log2_b_sq(b) / 2.0;
        MinorTerms {
            n,
            log2_b,
            next_j: 0,
            current: half_k_log2_k(n) + n as f64 * log2_b,
        }
    }
}

impl Iterator for MinorTerms {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let j = self.next_j;
        if j > self.n {
            return None;
        }
        let value = self.current;
        if j < self.n {
            let (n, jf) = (self.n, j as f64);
            let rest = (n - j) as f64;
            self.current =
                value - self.log2_b + (rest / (jf + 1.0)).log2() + half_k_log2_k(n - j - 1)
                    - half_k_log2_k(n - j);
        }
        self.next_j += 1;
        Some(value)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.n + 1).saturating_sub(self.next_j);
        (left, Some(left))
    }
}

/// `log2 F(n, j)` via the recurrence (`j` steps).
pub fn minor_term_log2(n: usize, b: f64, j: usize) -> Result<f64> {
    if j > n {
        return Err(Error::Domain { index: j, n });
    }
    Ok(MinorTerms::new(n, b).nth(j).expect("j <= n"))
}

/// `log2 F(n, j)` evaluated directly from the binomial product.
pub fn minor_term_log2_direct(n: usize, b: f64, j: usize) -> Result<f64> {
    if j > n {
        return Err(Error::Domain { index: j, n });
    }
    let log2_binom: f64 = (1..=j)
        .map(|i| ((n - j + i) as f64 / i as f64).log2())
        .sum();
    let k = n - j;
    let hadamard = if k == 0 {
        0.0
    } else {
        k as f64 / 2.0 * ((k as f64).log2() + log2_b_sq(b))
    };
    Ok(log2_binom + hadamard)
}

fn exhaustive_max(n: usize, b: f64) -> (usize, f64) {
    MinorTerms::new(n, b)
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (j, v)| {
            if v > best.1 {
                (j, v)
            } else {
                best
            }
        })
}

/// Closed-form bound `(n/2)(log2 n + log2 B^2 + c)` for `n >= 4`; below
/// that, the exhaustive maximum of `log2 F(n, j)` over `j = 0..=n`.
pub fn closed_form_bound(n: usize, b: f64) -> CoeffBound {
    if n < CLOSED_FORM_MIN_DIM {
        let (j, bits) = exhaustive_max(n, b);
        return CoeffBound::new(bits, BoundMethod::ClosedForm).with_meta(BoundMeta {
            argmax_j: Some(j),
            scanned: Some(n + 1),
            exhaustive: true,
            ..BoundMeta::default()
        });
    }
    let nf = n as f64;
    let bits = nf / 2.0 * (nf.log2() + log2_b_sq(b) + CLOSED_FORM_CONSTANT);
    CoeffBound::new(bits, BoundMethod::ClosedForm)
}

/// Upper end of the index range that can hold the largest minor term:
/// `max(0, (-1 + sqrt(1 + 2 delta B^2 n)) / (delta B^2))`, with `B`
/// clamped to at least 1.
pub fn search_window(n: usize, b: f64) -> f64 {
    let b = b.max(1.0);
    let db2 = WINDOW_DELTA * b * b;
    let w = (-1.0 + (1.0 + 2.0 * db2 * n as f64).sqrt()) / db2;
    w.max(0.0)
}

/// Index of the last minor term scanned by [`windowed_search_bound`].
pub fn last_scanned_index(n: usize, b: f64) -> usize {
    let window = search_window(n, b).ceil() as usize;
    let cap = if n >= CLOSED_FORM_MIN_DIM { n / 2 } else { n };
    window.min(cap)
}

/// Maximum of `log2 F(n, j)` over `j = 0..=min(ceil(window), n/2)`,
/// stepping the recurrence once per index. `j = 0` is always scanned.
///
/// For `n < 4` the cap is `n` instead of `n/2`; every term with `j >= 2`
/// is then dominated by the `j = 0` term, so the window still finds the
/// global maximum.
pub fn windowed_search_bound(n: usize, b: f64) -> CoeffBound {
    let window = search_window(n, b);
    if b == 0.0 {
        return CoeffBound::new(0.0, BoundMethod::WindowedSearch).with_meta(BoundMeta {
            window: Some(window),
            scanned: Some(0),
            ..BoundMeta::default()
        });
    }
    let last = last_scanned_index(n, b);
    let mut best = (0, f64::NEG_INFINITY);
    let mut scanned = 0;
    for (j, v) in MinorTerms::new(n, b).take(last + 1).enumerate() {
        scanned += 1;
        if v > best.1 {
            best = (j, v);
        }
    }
    CoeffBound::new(best.1, BoundMethod::WindowedSearch).with_meta(BoundMeta {
        argmax_j: Some(best.0),
        scanned: Some(scanned),
        window: Some(window),
        ..BoundMeta::default()
    })
}
