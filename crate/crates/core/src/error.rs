use crate::scalar::ScalarError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a group table: {0}")]
    NotAGroup(String),
    #[error("unsupported characteristic {characteristic}: {reason}")]
    BadCharacteristic { characteristic: u64, reason: String },
    #[error("not Hopf-Galois: {0}")]
    NotGalois(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("invalid crossed-product data, violated: {}", conditions.join(", "))]
    InvalidCrossedData {
        conditions: Vec<String>,
        detail: String,
    },
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    #[error("membership violation: {0}")]
    MembershipViolation(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("internal invariant failed: {0}")]
    InternalInvariant(String),
    #[error("induced structure is not well defined: {0}")]
    IllDefinedStructure(String),
    #[error("endomorphism is not rational: {0}")]
    NotRational(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("search inconclusive: {0}")]
    SearchInconclusive(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code: 2 for unusable input, 3 for an inconclusive search, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DimensionMismatch(_)
            | Error::NotAGroup(_)
            | Error::BadCharacteristic { .. }
            | Error::HypothesisViolated(_)
            | Error::Parse(_)
            | Error::Validation(_)
            | Error::Scalar(_)
            | Error::Io(_) => 2,
            Error::SearchInconclusive(_) => 3,
            _ => 1,
        }
    }
}
