//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by callers that map errors to process exit
/// codes: input problems, numerical non-convergence, and physically
/// degenerate-but-well-formed inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Input,
    Convergence,
    Degenerate,
}

#[derive(Debug, Error)]
pub enum Error {
    /// A required key is absent from a configuration document.
    #[error("missing key `{0}`")]
    MissingKey(String),

    /// A key is present but its value cannot be used.
    #[error("invalid value for `{key}`: {reason}")]
    InvalidValue { key: String, reason: String },

    /// A matrix that must be symmetric positive definite is not.
    #[error("`{0}` is not symmetric positive definite")]
    NotPositiveDefinite(String),

    /// Rotation matrix fails the orthogonality check.
    #[error("rotation matrix is not orthogonal (max |R^T R - I| = {defect:.3e})")]
    NotOrthogonal { defect: f64 },

    /// Configuration document could not be parsed at all.
    #[error("cannot parse {path}: {reason}")]
    Parse { path: String, reason: String },

    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },

    /// The trial velocity admits propagating bulk partial waves.
    #[error("trial velocity {velocity} m/s is not subsonic: found {decaying} decaying partial waves instead of 4")]
    NotSubsonic { velocity: f64, decaying: usize },

    /// A boundary-condition row vanished identically.
    #[error("boundary matrix row {row} has zero norm; cannot normalize")]
    SingularBoundaryRow { row: usize },

    /// Velocity search found no boundary-determinant minimum below threshold.
    #[error("no surface-wave root in bracket [{lo}, {hi}] m/s (best residual {best:.3e})")]
    NoRootInBracket { lo: f64, hi: f64, best: f64 },

    /// Iterative fit exceeded its iteration budget.
    #[error("fit did not converge after {iterations} iterations (rms residual {residual:.3e})")]
    FitDidNotConverge { iterations: usize, residual: f64 },

    /// Spectrum fails structural validation.
    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    /// The optical mode sits where the symmetric modulation channel vanishes.
    #[error("no modulation sensitivity: optical mode is at a standing-wave node")]
    NoModulationSensitivity,

    /// Degenerate physics input outside the evaluable domain.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Generic precondition violation on an operation argument.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::NoRootInBracket { .. } | Error::FitDidNotConverge { .. } => {
                ErrorCategory::Convergence
            }
            Error::NoModulationSensitivity | Error::DegenerateInput(_) => ErrorCategory::Degenerate,
            _ => ErrorCategory::Input,
        }
    }
}
