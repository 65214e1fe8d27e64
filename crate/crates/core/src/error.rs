//! Error types shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by state construction, sampling, estimation and fitting.
#[derive(Debug, Error)]
pub enum Error {
    /// A numeric argument was non-finite or outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A path or waveguide index exceeded the dimension it addresses.
    #[error("index {index} out of range for dimension {dimension}")]
    IndexOutOfRange { index: usize, dimension: usize },

    /// Two sequences that must have equal lengths did not.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// A state vector with zero total power cannot yield outcome probabilities.
    #[error("degenerate state: total power is zero")]
    DegenerateState,

    /// All counts vanished after dark-count subtraction.
    #[error("insufficient statistics: no counts remain after correction")]
    InsufficientStatistics,

    /// The calibration sweep does not constrain the model.
    #[error("under-determined sweep: {0}")]
    UnderDetermined(String),

    /// An iterative fit failed to converge.
    #[error("fit did not converge: {0}")]
    NonConvergence(String),

    /// Requested phase cannot be reached within the power budget.
    #[error("unreachable phase: {0}")]
    UnreachablePhase(String),

    /// Malformed input data (CSV/JSON), with position information.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(value: f64, name: &str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameter(format!("{name} must be finite, got {value}")))
    }
}
