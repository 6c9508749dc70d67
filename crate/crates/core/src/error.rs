use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(u64),
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },
    #[error("ring shape mismatch: operation requires {expected}, but Z_{n} is not of that shape")]
    ShapeMismatch { expected: &'static str, n: u64 },
    #[error("vector length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("ring mismatch: Z_{0} vs Z_{1}")]
    RingMismatch(u64, u64),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("enumeration threshold exceeded: {cardinality} elements, threshold {threshold}")]
    ThresholdExceeded { cardinality: u128, threshold: u128 },
    #[error("the zero vector is not admitted here")]
    ZeroVector,
    #[error("column multiset does not contain {k} linearly independent vectors")]
    NotEnoughIndependent { k: usize },
    #[error("double-perp identity violated for v = {0}; this indicates an internal bug")]
    DoublePerpViolated(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
