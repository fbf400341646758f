use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring context mismatch: ell={left} vs ell={right}")]
    ContextMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("linear form is zero")]
    DegenerateDivisor,

    #[error("not a homogeneous linear form: {0}")]
    NotLinear(String),

    #[error("shape error: {0}")]
    Shape(String),

    /// An exact division left a remainder. This is never valid data.
    #[error("internal invariant violated: inexact division ({0})")]
    InexactDivision(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("too few primes for interpolation: need {needed}, got {got}")]
    TooFewPrimes { needed: usize, got: usize },

    #[error("invalid prime {prime}: {reason}")]
    InvalidPrime { prime: u64, reason: String },

    #[error("finite-field counts are inconsistent: {0}")]
    OracleInconsistent(String),

    #[error("basis has not been verified")]
    NotVerified,

    #[error("degree guard: predicted determinant degree {predicted} exceeds bound {bound}")]
    DegreeGuard { predicted: u32, bound: u32 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
