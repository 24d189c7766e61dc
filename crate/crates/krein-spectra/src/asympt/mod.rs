//! Asymptotic series, Hankel coefficients, pole/residue tables and power
//! law fitting.

mod fit;
mod poles;
mod series;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use fit::{default_fit_window, fit_power_law, PowerLawFit};
pub use poles::{eta_pole_table, heat_exp_coeffs, pole_table, HeatCoefficient, PoleEntry, PoleSource, PoleTable, MERGE_TOLERANCE};
pub use series::{gamma_ratio_coeffs, hankel_pq, resolvent_asymptotic_coeffs, series_exp, HankelSeries};

/// Expansion variable of an asymptotic series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variable {
    T,
    InvLambda,
    InvN,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub exponent: f64,
    pub coefficient: f64,
    /// The coefficient multiplies i rather than 1.
    pub imaginary: bool,
}

impl SeriesTerm {
    pub fn real(exponent: f64, coefficient: f64) -> Self {
        SeriesTerm { exponent, coefficient, imaginary: false }
    }
}

/// Σ coefficient · x^{exponent} with strictly increasing exponents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticSeries {
    pub variable: Variable,
    terms: Vec<SeriesTerm>,
}

impl AsymptoticSeries {
    pub fn new(variable: Variable, terms: Vec<SeriesTerm>) -> Result<Self> {
        if terms.iter().any(|t| !t.coefficient.is_finite() || !t.exponent.is_finite()) {
            return Err(Error::InvalidParameter("series terms must be finite".into()));
        }
        if terms.windows(2).any(|w| w[1].exponent <= w[0].exponent) {
            return Err(Error::InvalidParameter("series exponents must be strictly increasing".into()));
        }
        Ok(AsymptoticSeries { variable, terms })
    }

    pub fn terms(&self) -> &[SeriesTerm] {
        &self.terms
    }

    /// Coefficient at `exponent`, zero if absent.
    pub fn coefficient(&self, exponent: f64) -> f64 {
        self.terms
            .iter()
            .find(|t| (t.exponent - exponent).abs() < 1e-12)
            .map_or(0.0, |t| t.coefficient)
    }

    /// Sum of the real terms at x.
    pub fn eval(&self, x: f64) -> f64 {
        self.terms.iter().filter(|t| !t.imaginary).map(|t| t.coefficient * x.powf(t.exponent)).sum()
    }
}
