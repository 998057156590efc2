#![allow(dead_code)]

use num_bigint::BigInt;
use polybound::IntegerMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const EXAMPLE5: &str = "5 5\n\
    1 1 1 1 1\n\
    1 1 -1 -1 -1\n\
    1 -1 1 -1 -1\n\
    1 -1 -1 1 -1\n\
    1 -1 -1 -1 1\n";

pub fn example5() -> IntegerMatrix {
    polybound::load_matrix(EXAMPLE5.as_bytes(), polybound::MatrixFormat::Dense).unwrap()
}

pub fn from_grid(n: usize, grid: &[i64]) -> IntegerMatrix {
    IntegerMatrix::from_entries(n, grid.iter().map(|&v| BigInt::from(v)).collect()).unwrap()
}

/// Entries uniform in `[-b, b]`.
pub fn uniform(rng: &mut impl Rng, n: usize, b: i64) -> IntegerMatrix {
    let grid: Vec<i64> = (0..n * n).map(|_| rng.random_range(-b..=b)).collect();
    from_grid(n, &grid)
}

/// Every entry `+b` or `-b`.
pub fn sign_pattern(rng: &mut impl Rng, n: usize, b: i64) -> IntegerMatrix {
    let grid: Vec<i64> = (0..n * n)
        .map(|_| if rng.random_bool(0.5) { b } else { -b })
        .collect();
    from_grid(n, &grid)
}

/// Block-diagonal Jordan form with eigenvalues from a small set (so that
/// eigenvalues repeat), conjugated by a product of integer elementary
/// matrices. The minimal polynomial is then a proper divisor of the
/// characteristic polynomial in most draws.
pub fn jordan_like(rng: &mut impl Rng, n: usize) -> IntegerMatrix {
    let mut g = vec![vec![0i64; n]; n];
    let eigen: Vec<i64> = (0..rng.random_range(1..=3))
        .map(|_| rng.random_range(-3..=3))
        .collect();
    let mut i = 0;
    while i < n {
        let size = rng.random_range(1..=(n - i).min(3));
        let lambda = eigen[rng.random_range(0..eigen.len())];
        for k in i..i + size {
            g[k][k] = lambda;
            if k + 1 < i + size {
                g[k][k + 1] = 1;
            }
        }
        i += size;
    }
    // E A E^{-1} with E = I + c e_r e_s^T: row r += c row s, col s -= c col r
    for _ in 0..2 * n {
        let r = rng.random_range(0..n);
        let s = rng.random_range(0..n);
        if r == s {
            continue;
        }
        let c: i64 = *[-1, 1, 2].get(rng.random_range(0..3)).unwrap();
        let src = g[s].clone();
        for (x, y) in g[r].iter_mut().zip(src) {
            *x += c * y;
        }
        for row in g.iter_mut() {
            row[s] -= c * row[r];
        }
    }
    let flat: Vec<i64> = g.into_iter().flatten().collect();
    from_grid(n, &flat)
}

/// Diagonal blocks repeated: `diag(B, B, C)` for small random blocks.
pub fn repeated_blocks(rng: &mut impl Rng, n: usize) -> IntegerMatrix {
    let mut g = vec![vec![0i64; n]; n];
    let size = rng.random_range(1..=(n / 2).max(1));
    let block: Vec<Vec<i64>> = (0..size)
        .map(|_| (0..size).map(|_| rng.random_range(-2..=2)).collect())
        .collect();
    let mut at = 0;
    while at + size <= n {
        for i in 0..size {
            for j in 0..size {
                g[at + i][at + j] = block[i][j];
            }
        }
        at += size;
    }
    for (k, row) in g.iter_mut().enumerate().skip(at) {
        row[k] = rng.random_range(-2..=2);
    }
    let flat: Vec<i64> = g.into_iter().flatten().collect();
    from_grid(n, &flat)
}
