//! Library error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("cannot parse algebra descriptor: {0}")]
    BadDescriptor(String),
    #[error("bilinear form unavailable for {0}")]
    FormUnavailable(String),
    #[error("{0} is not an isotropic root")]
    NotIsotropic(String),
    #[error("{0} is not a simple even root")]
    NotSimple(String),
    #[error("datum mismatch: {0}")]
    DatumMismatch(String),
    #[error("not a base: {0}")]
    InvalidBase(String),
    #[error("bad word: {0}")]
    BadWord(String),
    #[error("base kind unavailable: {0}")]
    KindUnavailable(String),
    #[error("odd reflections unavailable: {0}")]
    OddReflectUnavailable(String),
    #[error("invalid reflection path step: {0}")]
    InvalidPathStep(String),
    #[error("dominance criterion not provided for this family: {0}")]
    DominanceUnsupported(String),
    #[error("closed-form dominance requires the single-reflection hypothesis, which fails here; check satisfies_coro_hypothesis")]
    CoroHypothesisFails,
    #[error("property (Pr1) fails for this base; {0}")]
    Pr1Fails(String),
    #[error("weight is not dominant-integrable: {0}")]
    NotDominantIntegrable(String),
    #[error("no short basis for {0}")]
    ShortBasisUnavailable(String),
    #[error("linear system inconsistent: {0}")]
    SolverInconsistent(String),
    #[error("element fails membership in A: {0}")]
    NotInA(String),
    #[error("coefficient at {0} is not a Z[xi]-multiple of the expected pattern")]
    CoefficientNotMultiple(String),
    #[error("support violates a precondition: {0}")]
    SupportViolation(String),
    #[error("support not integral: {0}")]
    NonIntegralSupport(String),
    #[error("operation unsupported: {0}")]
    Unsupported(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
