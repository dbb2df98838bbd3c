use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid strand count {0}")]
    InvalidStrandCount(usize),

    #[error("expected n = {expected}, got n = {got}")]
    StrandCountMismatch { expected: usize, got: usize },

    #[error("{0} is not a unit")]
    NonUnit(String),

    #[error("multinomial indices {i} + {j} + {k} do not sum to {p}")]
    MultinomialMismatch { p: u64, i: u64, j: u64, k: u64 },

    #[error("backend mismatch: {0}")]
    BackendMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular matrix")]
    SingularMatrix,

    #[error("relation violated: {0}")]
    RelationViolation(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
