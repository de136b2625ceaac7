use thiserror::Error;

/// Errors shared across the library. Every fallible public operation
/// returns one of these; none of them panics on bad input.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter combination that is outside an operation's domain.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The zero polynomial was supplied where a nonzero one is required.
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,

    /// A polynomial was expected to be univariate.
    #[error("expected a univariate polynomial, got {nvars} variables")]
    NotUnivariate { nvars: usize },

    /// Mismatched dimensions (evaluation points, exponent vectors, vectors).
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A randomly generated instance failed a genericity check; the caller
    /// should retry with a fresh seed.
    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),

    /// An enumeration would exceed the caller-supplied cap.
    #[error("enumeration size {size} exceeds cap {cap}")]
    CapExceeded { size: u128, cap: u128 },

    /// A basis whose vectors are linearly dependent.
    #[error("vectors are linearly dependent")]
    DependentVectors,
}

pub type Result<T> = std::result::Result<T, Error>;
