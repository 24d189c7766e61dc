//! Spectral functions: heat traces, zeta and eta functions, resolvent
//! trace sums and the supersymmetric graded partition function.

mod continued;
mod graded;
mod heat;
mod resolvent;
mod tail;
mod zeta;

use serde::{Deserialize, Serialize};

pub use graded::{graded_partition, graded_weight, susy_norm_quadrature};
pub use heat::{ab_graded_heat_sum, heat_trace, heat_trace_diff};
pub use resolvent::resolvent_trace_sum;
pub use zeta::{eta, zeta_continued, zeta_sum, ETA_TOL};

/// Tolerance used when a caller does not supply one.
pub const DEFAULT_TOL: f64 = 1e-10;

/// A value of a spectral function at one argument.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralSample {
    /// t, s or λ.
    pub argument: f64,
    pub value: f64,
    /// Certified bound on the truncation error.
    pub truncation_error_bound: f64,
    pub terms_used: usize,
    /// |λ₀|^{−s} of a negative eigenvalue, excluded from `value`. The full
    /// zeta function adds it with the phase e^{∓iπs}.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negative_mode: Option<f64>,
}

impl SpectralSample {
    pub(crate) fn new(argument: f64, value: f64, bound: f64, terms: usize) -> Self {
        SpectralSample { argument, value, truncation_error_bound: bound, terms_used: terms, negative_mode: None }
    }
}

/// Pairwise summation with a fixed tree, so results do not depend on how
/// the terms were produced.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 32 {
        xs.iter().sum()
    } else {
        let mid = xs.len() / 2;
        pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
    }
}

pub(crate) fn check_tol(tol: f64) -> crate::Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(crate::Error::InvalidParameter(format!("tolerance must be positive, got {tol}")))
    }
}
