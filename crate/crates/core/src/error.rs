use alloc::string::String;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("cannot combine a form with a multivector")]
    KindMismatch,
    #[error("contraction degree {inner} exceeds target degree {outer}")]
    DegreeTooLarge { inner: usize, outer: usize },
    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("ideal basis is not reduced: {0}")]
    NotReduced(String),
    #[error("expected {expected} functions, got {got}")]
    WrongFunctionCount { expected: usize, got: usize },
    #[error("{0} has a nonzero constant term")]
    ConstantTerm(String),
    #[error("element is not a cycle")]
    NotACycle,
    #[error("subspace is not contained in the ambient span")]
    NotContained,
    #[error("unsupported problem: {0}")]
    Unsupported(String),
    #[error("normalization step at weight {weight} has no solution")]
    UnsolvableStep { weight: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = core::result::Result<T, AlgebraError>;
