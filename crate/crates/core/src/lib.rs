//! Coefficient bounds for the characteristic and minimal polynomials of
//! integer matrices, and the modular / Chinese-remaindering computation of
//! both polynomials that those bounds make deterministic.
//!
//! ```
//! use polybound::{reconstruct_charpoly, ComputeOptions, IntegerMatrix};
//!
//! let a = IntegerMatrix::from_rows(&[[2, 1], [1, 2]]).unwrap();
//! let cp = reconstruct_charpoly(&a, ComputeOptions::default()).unwrap();
//! assert_eq!(cp.to_string(), "X^2 - 4*X + 3");
//! ```

pub mod bound;
pub mod charpoly_bounds;
pub mod crt;
pub mod error;
pub mod matrix;
pub mod minpoly_bounds;
pub mod modular;
pub mod oracle;
pub mod poly;
pub mod primes;

pub use bound::{BoundMeta, BoundMethod, CoeffBound};
pub use charpoly_bounds::{
    closed_form_bound, hadamard_bound, minor_term_log2, minor_term_log2_direct, search_window,
    windowed_search_bound,
};
pub use crt::{
    crt_combine, plan_primes, reconstruct_charpoly, reconstruct_charpoly_with_report,
    reconstruct_minpoly, reconstruct_minpoly_with_report, CharpolyReport, ComputeOptions, CrtPlan,
    MinpolyReport, DEFAULT_PRIME_BITS,
};
pub use error::{Error, Result};
pub use matrix::{load_matrix, IntegerMatrix, MagnitudeStats, MatrixFormat};
pub use minpoly_bounds::{
    best_minpoly_bound, cassini_bound, gershgorin_bound, mignotte_bound, spectral_coeff_bound,
    spectral_radius_bound, SpectralBound, SpectralMethod,
};
pub use modular::{charpoly_mod, minpoly_mod, reduce_mod, ModMatrix, ModPolynomial};
pub use poly::IntPolynomial;
pub use primes::{prime_stream, PrimeStream};
