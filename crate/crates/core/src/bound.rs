//! The bound value type shared by the characteristic and minimal polynomial
//! estimates. Bounds are carried as base-2 logarithms.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Which estimate produced a [`CoeffBound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundMethod {
    /// `sqrt(n B^2)^n`.
    Hadamard,
    /// Closed form `(n/2)(log2 n + log2 B^2 + c)`.
    ClosedForm,
    /// Maximum of the diagonal-minor terms over the localized window.
    WindowedSearch,
    /// `2^d` times a characteristic polynomial bound.
    Mignotte,
    /// Spectral-radius estimate `beta^d` and its refinements.
    Spectral,
}

impl BoundMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundMethod::Hadamard => "hadamard",
            BoundMethod::ClosedForm => "closed-form",
            BoundMethod::WindowedSearch => "windowed-search",
            BoundMethod::Mignotte => "mignotte",
            BoundMethod::Spectral => "spectral",
        }
    }
}

impl fmt::Display for BoundMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Optional details attached to a bound.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BoundMeta {
    /// Index of the largest minor term found by the windowed search.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argmax_j: Option<usize>,
    /// Number of minor terms evaluated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scanned: Option<usize>,
    /// Real-valued upper end of the search window.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<f64>,
    /// Spectral radius bound used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    /// Minimal polynomial degree used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    /// For combined bounds: which estimate won.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub winner: Option<BoundMethod>,
    /// Set when the dimension is below the closed form's range and the
    /// exhaustive maximum over all minor terms was used instead.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub exhaustive: bool,
}

/// Upper bound `2^bits` on the largest absolute coefficient of a polynomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffBound {
    pub bits: f64,
    pub method: BoundMethod,
    pub meta: BoundMeta,
}

/// Per-dimension slack added before prime planning to absorb rounding in
/// the logarithmic arithmetic.
pub const PLANNING_SLACK_PER_DIM: f64 = 1e-9;

impl CoeffBound {
    pub fn new(bits: f64, method: BoundMethod) -> Self {
        CoeffBound {
            bits: bits.max(0.0),
            method,
            meta: BoundMeta::default(),
        }
    }

    pub fn with_meta(mut self, meta: BoundMeta) -> Self {
        self.meta = meta;
        self
    }

    /// `2^bits` (may be infinite for very large bounds).
    pub fn value(&self) -> f64 {
        self.bits.exp2()
    }

    /// The bound widened by `1e-9 * n` bits, as used for prime planning.
    pub fn with_planning_slack(&self, n: usize) -> CoeffBound {
        CoeffBound {
            bits: self.bits + PLANNING_SLACK_PER_DIM * n as f64,
            ..self.clone()
        }
    }

    /// Decimal rendering of `2^bits`: fixed point for moderate values,
    /// scientific otherwise.
    pub fn decimal_approx(&self) -> String {
        decimal_approx(self.bits)
    }
}

pub fn decimal_approx(bits: f64) -> String {
    if bits < 60.0 {
        return format!("{:.6}", bits.exp2());
    }
    let log10 = bits * std::f64::consts::LOG10_2;
    let mut exponent = log10.floor();
    let mut mantissa = 10f64.powf(log10 - exponent);
    if mantissa >= 9.9999995 {
        mantissa /= 10.0;
        exponent += 1.0;
    }
    format!("{mantissa:.6}e{exponent}")
}
