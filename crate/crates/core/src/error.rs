use thiserror::Error;

/// Failures raised by model evaluation, metric construction and integration.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("state outside model domain: {0}")]
    Domain(String),
    #[error("singular coefficient: {0}")]
    Singularity(String),
    #[error("thermodynamically unstable state: {0}")]
    Instability(String),
    #[error("negative quadratic form: {0:e}")]
    NegativeQuadraticForm(f64),
    #[error("quadrature did not converge after {panels} panels (estimated error {estimated_error:e})")]
    Convergence { panels: usize, estimated_error: f64 },
    #[error("{operation} is not supported for the {variant} model")]
    UnsupportedModel {
        operation: &'static str,
        variant: &'static str,
    },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("degenerate process: {0}")]
    DegenerateProcess(String),
    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    /// True for failures of the numerics (as opposed to bad inputs).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Singularity(_)
                | Error::Instability(_)
                | Error::NegativeQuadraticForm(_)
                | Error::Convergence { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
