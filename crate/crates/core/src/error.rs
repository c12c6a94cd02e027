use thiserror::Error;

/// Errors raised by the exact computations.
///
/// Mathematical check failures are reported through result structs, not
/// through this type: an `Err` always means the request itself could not be
/// honoured (bad shapes, a refused precondition, a budget overrun).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("not a generalized Rota-Baxter system (witness {0})")]
    NotRotaBaxter(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("{0} is not an algebra morphism (witness {1})")]
    NotAlgebraMap(String, String),
    #[error("gauge map is not a 1-cocycle (witness {0})")]
    NotCocycle(String),
    #[error("reduction hypothesis failed: {0}")]
    Reduction(ReductionFailure),
    #[error("pole: {0}")]
    Pole(String),
    #[error("arity {requested} exceeds the truncation bound {bound}")]
    Truncation { requested: usize, bound: usize },
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("skew-symmetry required: {0}")]
    NotSkew(String),
    #[error("two-term hypothesis failed: {0}")]
    TwoTerm(String),
    #[error("index out of range: {0}")]
    IndexRange(String),
    #[error("degree violation: {0}")]
    Degree(String),
}

/// The named hypotheses of the reduction construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionFailure {
    #[error("B is not a subalgebra")]
    NotSubalgebra,
    #[error("E ∩ B is not an ideal of B, so B/(E ∩ B) is not an algebra")]
    QuotientNotAlgebra,
    #[error("N is not a B-sub-bimodule of M")]
    NotSubBimodule,
    #[error("{0} does not map the annihilator into B")]
    ImageOutsideSubalgebra(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Dimension(msg.into()))
}
