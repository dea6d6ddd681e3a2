use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular (rank {rank} < {dim})")]
    SingularMatrix { rank: usize, dim: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid shape gl({m}|{n}): both parts must be at least 1")]
    InvalidShape { m: usize, n: usize },

    #[error("rank {r} out of range for gl({m}|{n})")]
    RankOutOfRange { m: usize, n: usize, r: usize },

    #[error("argument is not homogeneous of degree -1")]
    NotDegreeMinusOne,

    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,

    #[error("verification failed: {0}")]
    VerificationFailure(String),

    #[error("malformed structure constants: {0}")]
    MalformedConstants(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
