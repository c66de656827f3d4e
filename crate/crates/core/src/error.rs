use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cyclotomic order must be at least 1, got {0}")]
    InvalidCyclotomicOrder(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("delta not invertible")]
    DeltaNotInvertible,
    #[error("trace not *-invariant: delta_{m} != delta_{mirror}")]
    TraceNotStarInvariant { m: usize, mirror: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("walled generator e_{{{k},{l}}} does not cross the wall")]
    WallViolation { k: usize, l: usize },
    #[error("delta = 0 with even n is excluded (n = {0})")]
    DeltaZeroEvenExcluded(usize),
    #[error("no delta = 0 idempotent exists for {0}")]
    NoDeltaZeroIdempotent(String),
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("dimension {dim} exceeds cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("algebra mismatch: expected {expected}, got {got}")]
    AlgebraMismatch { expected: String, got: String },
    #[error("map is not multiplicative on basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("excluded characteristic {0}")]
    ExcludedCharacteristic(u64),
    #[error("diagram is not in layer {expected} (has {found} horizontal edges)")]
    WrongLayer { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input algebra: {0}")]
    InvalidAlgebra(String),
}
