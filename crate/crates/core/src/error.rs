use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("index {index} outside [0, {n}]")]
    Domain { index: usize, n: usize },

    #[error("prime bit size {0} outside 2..=62")]
    InvalidBitSize(u32),

    #[error("no more primes below 2^{bitsize}")]
    PrimesExhausted { bitsize: u32 },

    #[error("moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(u64, u64),

    #[error("residue {value} not reduced modulo {modulus}")]
    UnreducedResidue { value: u64, modulus: u64 },

    #[error("degree {degree} outside 1..={n}")]
    InvalidDegree { degree: usize, n: usize },

    #[error("dimension {n} exceeds the oracle limit {limit}")]
    SizeGuard { n: usize, limit: usize },

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
