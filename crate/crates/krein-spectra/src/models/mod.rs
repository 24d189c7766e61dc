//! The five operator models, their self-adjoint extensions, spectral
//! residuals, closed-form spectra and closed-form traces.

mod closed;
mod residual;
mod trace;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use closed::{closed_form_eigenvalue, first_index, graded_heat_closed_ab};
pub use residual::{normalized_residual, spectral_residual, Residual};
pub use trace::{krein_factor, negative_mode_condition, resolvent_trace_closed, KreinFactor, NegativeMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Oscillator,
    Interval,
    Dirac,
    AharonovBohm,
    Susy,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Oscillator => "oscillator",
            ModelKind::Interval => "interval",
            ModelKind::Dirac => "dirac",
            ModelKind::AharonovBohm => "ab",
            ModelKind::Susy => "susy",
        }
    }
}

/// A validated operator model.
///
/// The single stored parameter is ν for the oscillator and the interval,
/// α for the Dirac and supersymmetric models (the Dirac ν = 1/2 − α is
/// derived), and κ for the Aharonov–Bohm channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModelSpec {
    kind: ModelKind,
    param: f64,
}

fn open_interval(name: &str, v: f64, lo: f64, hi: f64) -> Result<f64> {
    if v.is_finite() && v > lo && v < hi {
        Ok(v)
    } else {
        Err(Error::InvalidParameter(format!("{name} must lie in ({lo}, {hi}), got {v}")))
    }
}

impl ModelSpec {
    /// Half-line operator −∂² + (ν²−1/4)/x² + x², ν ∈ (0,1).
    pub fn oscillator(nu: f64) -> Result<Self> {
        Ok(ModelSpec { kind: ModelKind::Oscillator, param: open_interval("nu", nu, 0.0, 1.0)? })
    }

    /// −∂² + (ν²−1/4)/x² on [0,1] with Dirichlet condition at 1, ν ∈ [0,1).
    pub fn interval(nu: f64) -> Result<Self> {
        if nu == 0.0 {
            return Ok(ModelSpec { kind: ModelKind::Interval, param: 0.0 });
        }
        Ok(ModelSpec { kind: ModelKind::Interval, param: open_interval("nu", nu, 0.0, 1.0)? })
    }

    /// Dirac operator on [0,1] with the α/x coupling, α ∈ (−1/2, 1/2).
    pub fn dirac(alpha: f64) -> Result<Self> {
        Ok(ModelSpec { kind: ModelKind::Dirac, param: open_interval("alpha", alpha, -0.5, 0.5)? })
    }

    /// Dirac operator specified by ν = 1/2 − α ∈ (0,1).
    pub fn dirac_nu(nu: f64) -> Result<Self> {
        open_interval("nu", nu, 0.0, 1.0)?;
        Ok(ModelSpec { kind: ModelKind::Dirac, param: 0.5 - nu })
    }

    /// The l = 0 Aharonov–Bohm channel, κ ∈ (0, 1/2).
    pub fn aharonov_bohm(kappa: f64) -> Result<Self> {
        Ok(ModelSpec { kind: ModelKind::AharonovBohm, param: open_interval("kappa", kappa, 0.0, 0.5)? })
    }

    /// Supercharge with superpotential α/x + x, α ∈ (−1/2, 1/2).
    pub fn susy(alpha: f64) -> Result<Self> {
        Ok(ModelSpec { kind: ModelKind::Susy, param: open_interval("alpha", alpha, -0.5, 0.5)? })
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    /// The singularity parameter as stored (ν, α or κ).
    pub fn param(&self) -> f64 {
        self.param
    }

    /// ν for the oscillator, interval and Dirac models.
    pub fn nu(&self) -> Option<f64> {
        match self.kind {
            ModelKind::Oscillator | ModelKind::Interval => Some(self.param),
            ModelKind::Dirac => Some(0.5 - self.param),
            _ => None,
        }
    }

    /// Models whose spectrum has both signs (first-order operators).
    pub fn is_signed(&self) -> bool {
        matches!(self.kind, ModelKind::Dirac | ModelKind::AharonovBohm | ModelKind::Susy)
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self.kind {
            ModelKind::Oscillator | ModelKind::Interval => "nu",
            ModelKind::Dirac | ModelKind::Susy => "alpha",
            ModelKind::AharonovBohm => "kappa",
        };
        write!(f, "{}({label}={})", self.kind.name(), self.param)
    }
}

/// Self-adjoint extension parameter: θ for the Schrödinger models, β for
/// Dirac and Aharonov–Bohm, β(γ) for the supercharge. `Infinity` is the
/// projective point at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Extension {
    Finite(f64),
    Infinity,
}

impl Extension {
    pub fn finite(v: f64) -> Result<Self> {
        if v.is_finite() {
            Ok(Extension::Finite(v))
        } else {
            Err(Error::InvalidExtension(format!("extension parameter must be finite, got {v}")))
        }
    }

    /// Parses a decimal number or one of `inf`, `infinity`, `-inf`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim().to_ascii_lowercase();
        match t.as_str() {
            "inf" | "+inf" | "-inf" | "infinity" | "+infinity" | "-infinity" => Ok(Extension::Infinity),
            _ => t
                .parse::<f64>()
                .map_err(|_| Error::InvalidExtension(format!("cannot parse extension parameter {text:?}")))
                .and_then(Extension::finite),
        }
    }

    /// The same extension with the parameter negated; maps a Dirac or
    /// supercharge spectrum to its mirror image.
    pub fn mirrored(self) -> Self {
        match self {
            Extension::Finite(v) => Extension::Finite(-v),
            Extension::Infinity => Extension::Infinity,
        }
    }

    /// Supercharge extension of angle γ ∈ [0, π):
    /// β(γ) = −√π cot γ / Γ(1−α). γ = 0 is the extension at infinity; a
    /// cosine within rounding of zero is taken as β = 0.
    pub fn from_susy_angle(alpha: f64, gamma: f64) -> Result<Self> {
        if !(0.0..std::f64::consts::PI).contains(&gamma) {
            return Err(Error::InvalidExtension(format!("gamma must lie in [0, pi), got {gamma}")));
        }
        if gamma == 0.0 {
            return Ok(Extension::Infinity);
        }
        let (s, c) = gamma.sin_cos();
        if c.abs() <= 4.0 * f64::EPSILON {
            return Ok(Extension::Finite(0.0));
        }
        let rg = crate::specfun::rgamma(1.0 - alpha);
        Extension::finite(-std::f64::consts::PI.sqrt() * c / s * rg)
    }

    pub fn is_zero(self) -> bool {
        self == Extension::Finite(0.0)
    }

    /// Whether the spectrum of this extension has a closed form.
    pub fn is_distinguished(self, model: &ModelSpec) -> bool {
        match self {
            Extension::Infinity => true,
            Extension::Finite(v) => v == 0.0 && !(model.kind == ModelKind::Interval && model.param == 0.0),
        }
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extension::Finite(v) => write!(f, "{v}"),
            Extension::Infinity => write!(f, "inf"),
        }
    }
}

/// Sign branch of a spectrum. Schrödinger models only have `Positive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Positive,
    Negative,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Positive => 1.0,
            Branch::Negative => -1.0,
        }
    }
}

/// An interval of the spectral variable on which the residual changes sign
/// exactly once.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralBracket {
    pub lo: f64,
    pub hi: f64,
    pub index: i64,
}

/// Argument of a closed-form trace: for the Schrödinger models the square
/// root μ of the spectral parameter (λ = μ² on `Real`, λ = −μ² on
/// `Imaginary`); for the Dirac model λ itself (λ = iy on `Imaginary`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectralPoint {
    Real(f64),
    Imaginary(f64),
}

impl SpectralPoint {
    /// λ for the Schrödinger models.
    pub fn lambda(self) -> f64 {
        match self {
            SpectralPoint::Real(m) => m * m,
            SpectralPoint::Imaginary(m) => -m * m,
        }
    }

    pub fn magnitude(self) -> f64 {
        match self {
            SpectralPoint::Real(m) | SpectralPoint::Imaginary(m) => m,
        }
    }
}

/// Γ(ν)/Γ(−ν), negative for ν ∈ (0,1).
pub(crate) fn gamma_quotient(nu: f64) -> f64 {
    crate::specfun::gamma_ratio(nu, -nu).unwrap_or(f64::NAN)
}

/// The interval constant c = 4^ν Γ(ν)/Γ(−ν).
pub(crate) fn interval_c(nu: f64) -> f64 {
    4f64.powf(nu) * gamma_quotient(nu)
}
