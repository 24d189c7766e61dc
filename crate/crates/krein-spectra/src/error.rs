use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function} has a pole at {at}")]
    Pole { function: &'static str, at: f64 },

    #[error("{function}: argument outside domain ({detail})")]
    Domain { function: &'static str, detail: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("extension not valid for this model: {0}")]
    InvalidExtension(String),

    #[error("extension {0} is not a distinguished extension of this model")]
    NotDistinguished(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("divergent region: {0}")]
    Divergent(String),

    #[error("insufficient order: {0}")]
    InsufficientOrder(String),

    #[error("argument {at} lies within {distance:e} of the spectrum")]
    NearEigenvalue { at: f64, distance: f64 },

    #[error("bracket failure: {0}")]
    BracketFailure(String),

    #[error("infeasible tolerance: {0}")]
    InfeasibleTolerance(String),

    #[error("samples mix signs")]
    SignMixing,

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by numerics.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidParameter(_)
                | Error::InvalidExtension(_)
                | Error::NotDistinguished(_)
                | Error::Unsupported(_)
                | Error::Divergent(_)
                | Error::InsufficientOrder(_)
                | Error::Domain { .. }
                | Error::Pole { .. }
                | Error::NearEigenvalue { .. }
        )
    }

    pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain { function, detail: detail.into() }
    }
}
