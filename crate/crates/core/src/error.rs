//! Error type shared across the engine.

use thiserror::Error;

/// Errors raised by exact and numeric operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("denominator vanishes at evaluation point (|den| = {magnitude:e})")]
    PoleAtPoint { magnitude: f64 },
    #[error("expansion center is a pole of the function")]
    PoleAtCenter,
    #[error("box ({row},{col}) lies outside the diagram")]
    BoxOutsideDiagram { row: usize, col: usize },
    #[error("vectors of mixed energy: {left} vs {right}")]
    MixedEnergy { left: usize, right: usize },
    #[error("eigenvalue of {0} collides with another partition's eigenvalue")]
    DegenerateEigenvalue(String),
    #[error("resonance at specialized parameters: {0}")]
    ResonanceAtSpecializedParameters(String),
    #[error("{0} is not a singular root of unity for this energy")]
    NotASingularRoot(String),
    #[error("gamma function pole at or near {0}")]
    PoleOfGamma(String),
    #[error("step size underflow: cannot meet tolerance near q = {0}")]
    StepUnderflow(String),
    #[error("path passes within clearance of singular point {0}")]
    SingularityTooClose(String),
    #[error("matrix of Haiman columns is numerically singular")]
    SingularHMatrix,
    #[error("Laurent fit residual {residual:e} exceeds tolerance {tol:e}")]
    FitResidualTooLarge { residual: f64, tol: f64 },
    #[error("excluded parameter: {0}")]
    ExcludedParameter(String),
    #[error("series did not terminate within the truncation order")]
    NotTerminated,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
