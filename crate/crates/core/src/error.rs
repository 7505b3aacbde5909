//! Error types shared by every module in the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A matrix expected to be Hermitian deviates from M = M† beyond tolerance.
    #[error("matrix is not Hermitian: max |M - M†| entry {deviation:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    /// The Jacobi eigensolver exhausted its sweep budget before the
    /// off-diagonal norm dropped below threshold.
    #[error("eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {residual:.3e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    /// An eigenvalue fell below the clamping window of a PSD operation.
    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    /// Operands or subsystem factorizations have incompatible dimensions.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A matrix entry is NaN or infinite.
    #[error("matrix entries must be finite (found non-finite entry at ({row}, {col}))")]
    NonFiniteEntry { row: usize, col: usize },

    /// A Bloch vector lies outside the unit ball.
    #[error("Bloch vector outside the unit ball: |n| = {norm}")]
    BlochOutOfBall { norm: f64 },

    /// Requested rank is invalid for the requested dimension.
    #[error("rank {rank} is invalid for dimension {dim} (need 1 <= rank <= dim)")]
    BadRank { rank: usize, dim: usize },

    /// A projector list fails the PVM axioms.
    #[error("invalid PVM: {0}")]
    InvalidPvm(String),

    /// Interaction duration must be strictly positive.
    #[error("interaction duration must be positive, got {0}")]
    NonpositiveDuration(f64),

    /// A scalar parameter lies outside its documented range.
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    /// A measurement direction is not normalized.
    #[error("measurement direction must be a unit vector: |m| = {norm}")]
    NotUnitDirection { norm: f64 },

    /// Scalar inputs are mutually inconsistent with any qubit state.
    #[error("inputs inconsistent with a qubit state: {0}")]
    InconsistentInputs(String),

    /// A quantity that must be nonnegative came out more negative than the
    /// roundoff clamping window allows. Indicates a solver bug, not roundoff.
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    /// File or stream I/O failed.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
