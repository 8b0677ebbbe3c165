use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },
    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid density matrix: {0}")]
    InvalidState(String),
    #[error("negative eigenvalue {0:.3e} below tolerance")]
    NegativeEigenvalue(f64),
    #[error("value {0} outside [0, 1]")]
    OutOfRange(f64),
    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("subsystem A is not a qubit (d_A = {0})")]
    NotQubit(usize),
    #[error("state is not a canonical pairing state")]
    NotCanonicalPairing,
    #[error("condition violated: {0}")]
    ConditionViolated(String),
    #[error("certificate has no transposition at index {0}")]
    NoTransposition(usize),
    #[error("invalid partition of A labels: {0}")]
    InvalidPartition(String),
    #[error("label collision: {0}")]
    LabelCollision(String),
    #[error("invalid coefficient matrix: {0}")]
    InvalidCoeffs(String),
    #[error("block supports overlap: {0}")]
    SupportOverlap(String),
    #[error("weights sum to {0}, expected 1")]
    WeightMismatch(f64),
    #[error("phase of entry ({row}, {col}) is not an L-th root of unity for L = {l}")]
    PhaseNotRoot { row: usize, col: usize, l: usize },
    #[error("construction dimension {dim} exceeds cap {cap}")]
    DimensionCapExceeded { dim: usize, cap: usize },
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("invalid rank {rank} for dimension {dim}")]
    InvalidRank { rank: usize, dim: usize },
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
