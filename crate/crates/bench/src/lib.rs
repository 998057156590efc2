//! Fixtures shared by the benchmarks.

use num_bigint::BigInt;
use polybound::IntegerMatrix;

/// Deterministic `n x n` matrix with entries in `[-bound, bound]`, drawn from
/// a 64-bit linear congruential sequence seeded by `seed`.
pub fn pseudo_random_matrix(n: usize, bound: i64, seed: u64) -> IntegerMatrix {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let span = (2 * bound + 1) as u64;
    let entries = (0..n * n)
        .map(|_| {
            state = state
                .wrapping_mul(6_364_136_223_846_793_005)
                .wrapping_add(1_442_695_040_888_963_407);
            BigInt::from(((state >> 33) % span) as i64 - bound)
        })
        .collect();
    IntegerMatrix::from_entries(n, entries).expect("square")
}
