use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polar angle {0} is outside [0, π]")]
    PolarOutOfDomain(f64),

    #[error("azimuthal angle {0} is outside [0, 2π)")]
    AzimuthOutOfDomain(f64),

    #[error("non-finite value: {0}")]
    NonFinite(&'static str),

    #[error("state is not normalized (‖ψ‖ = {0})")]
    NotNormalized(f64),

    #[error("invalid probability {value} at cell {index}")]
    InvalidProbability { index: usize, value: f64 },

    #[error("probabilities sum to {0}, expected 1")]
    NotNormalizedDistribution(f64),

    #[error("θ = {0} is outside [0, 1/2]")]
    ThetaOutOfDomain(f64),

    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),

    #[error("closed-form variants disagree by {0:e}")]
    ClosedFormMismatch(f64),

    #[error("observable pair does not lie in the {0} plane")]
    PlaneMismatch(&'static str),

    #[error("invalid bit {0}, expected 0 or 1")]
    InvalidBit(u8),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
