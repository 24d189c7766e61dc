//! Closed-form resolvent traces, the Krein factor and negative modes.

use std::f64::consts::{LN_2, PI};

use serde::Serialize;

use super::residual::{bessel_power, bessel_power_i, residual_terms};
use super::{gamma_quotient, interval_c, Extension, ModelKind, ModelSpec, SpectralBracket, SpectralPoint};
use crate::error::{Error, Result};
use crate::specfun::{
    bessel_i_scaled, bessel_j, bessel_k_scaled, bessel_y, digamma, gamma_ratio, lgamma, EULER_GAMMA,
};

/// K(λ) and τ(λ, θ) = 1/(1 + θK(λ)).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KreinFactor {
    pub k: f64,
    pub tau: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NegativeMode {
    None,
    Exists(SpectralBracket),
}

fn finite_or_near(value: f64, at: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NearEigenvalue { at, distance: 0.0 })
    }
}

fn require_interval(model: &ModelSpec) -> Result<f64> {
    match model.kind() {
        ModelKind::Interval => Ok(model.param()),
        _ => Err(Error::Unsupported(format!("Krein factor is defined for the interval model, not {model}"))),
    }
}

fn positive(point: SpectralPoint) -> Result<f64> {
    let m = point.magnitude().abs();
    if m > 0.0 && m.is_finite() {
        Ok(m)
    } else {
        Err(Error::domain("trace", format!("requires a positive finite magnitude, got {m}")))
    }
}

/// K(λ) of the interval model: the residual reads
/// μ^ν J_{−ν}(μ) (1 + θ K(μ²)), so K = −4^ν Γ(ν)/Γ(−ν) μ^{−2ν} J_ν/J_{−ν};
/// on λ = −μ² the modified Bessel ratio replaces J_ν/J_{−ν}.
/// For ν = 0, K = J₀/[(ln2 − γ − ln μ)J₀ + (π/2)Y₀].
pub fn krein_factor(model: &ModelSpec, ext: Extension, point: SpectralPoint) -> Result<KreinFactor> {
    let nu = require_interval(model)?;
    let mu = positive(point)?;
    let k = if nu == 0.0 {
        let l = LN_2 - EULER_GAMMA - mu.ln();
        match point {
            SpectralPoint::Real(_) => {
                let j0 = bessel_j(0.0, mu)?;
                j0 / (l * j0 + 0.5 * PI * bessel_y(0.0, mu)?)
            }
            SpectralPoint::Imaginary(_) => {
                let i0 = bessel_i_scaled(0.0, mu)?;
                i0 / (l * i0 - (-2.0 * mu).exp() * bessel_k_scaled(0.0, mu)?)
            }
        }
    } else {
        let c = interval_c(nu);
        match point {
            SpectralPoint::Real(_) => -c * bessel_power(nu, mu)? / bessel_power(-nu, mu)?,
            SpectralPoint::Imaginary(_) => -c * bessel_power_i(nu, mu)? / bessel_power_i(-nu, mu)?,
        }
    };
    if !k.is_finite() {
        return Err(Error::Pole { function: "krein_factor", at: point.lambda() });
    }
    let tau = match ext {
        Extension::Infinity => 0.0,
        Extension::Finite(theta) => 1.0 / (1.0 + theta * k),
    };
    Ok(KreinFactor { k, tau })
}

/// Σ 1/(λ_n − λ) for the interval model at θ = ∞ and θ = 0.
fn interval_pair(nu: f64, point: SpectralPoint, mu: f64) -> Result<(f64, f64)> {
    match point {
        SpectralPoint::Real(_) => {
            let t_inf = bessel_j(nu + 1.0, mu)? / (2.0 * mu * bessel_j(nu, mu)?);
            let t_zero = bessel_j(1.0 - nu, mu)? / (2.0 * mu * bessel_j(-nu, mu)?);
            Ok((t_inf, t_zero))
        }
        SpectralPoint::Imaginary(_) => {
            let t_inf = bessel_i_scaled(nu + 1.0, mu)? / (2.0 * mu * bessel_i_scaled(nu, mu)?);
            let t_zero = bessel_i_scaled(1.0 - nu, mu)? / (2.0 * mu * bessel_i_scaled(-nu, mu)?);
            Ok((t_inf, t_zero))
        }
    }
}

fn interval_log_trace(ext: Extension, point: SpectralPoint, mu: f64) -> Result<f64> {
    let (theta, scale) = match ext {
        Extension::Finite(t) => (t, 1.0),
        Extension::Infinity => (1.0, 0.0),
    };
    let l = theta + scale * (LN_2 - EULER_GAMMA - mu.ln());
    match point {
        SpectralPoint::Real(_) => {
            let (j0, j1) = (bessel_j(0.0, mu)?, bessel_j(1.0, mu)?);
            let (y0, y1) = (bessel_y(0.0, mu)?, bessel_y(1.0, mu)?);
            let h = 0.5 * PI * scale;
            Ok((scale * j0 / mu + l * j1 + h * y1) / (2.0 * mu * (l * j0 + h * y0)))
        }
        SpectralPoint::Imaginary(_) => {
            // K terms carry e^{-2μ} relative to the scaled I terms
            let (i0, i1) = (bessel_i_scaled(0.0, mu)?, bessel_i_scaled(1.0, mu)?);
            let w = scale * (-2.0 * mu).exp();
            let (k0, k1) = (w * bessel_k_scaled(0.0, mu)?, w * bessel_k_scaled(1.0, mu)?);
            Ok((-scale * i0 / mu + l * i1 + k1) / (2.0 * mu * (l * i0 - k0)))
        }
    }
}

/// Tr_θ − Tr_∞ for the oscillator at λ:
/// ¼ · R/(R − g) · [ψ((1+ν)/2 − λ/4) − ψ((1−ν)/2 − λ/4)], R = Γ(b−x)/Γ(a−x).
fn oscillator_trace_difference(nu: f64, ext: Extension, lam: f64) -> Result<f64> {
    let theta = match ext {
        Extension::Infinity => return Ok(0.0),
        Extension::Finite(t) => t,
    };
    let x = lam / 4.0;
    let (a, b) = (0.5 * (1.0 - nu), 0.5 * (1.0 + nu));
    let g = theta * gamma_quotient(nu);
    let psi = digamma(b - x).and_then(|pb| Ok(pb - digamma(a - x)?));
    let psi = psi.map_err(|_| Error::NearEigenvalue { at: lam, distance: 0.0 })?;
    // R/(R − g) = 1/(1 − g Γ(a−x)/Γ(b−x))
    let inv_r = gamma_ratio(a - x, b - x).map_err(|_| Error::NearEigenvalue { at: lam, distance: 0.0 })?;
    finite_or_near(0.25 * psi / (1.0 - g * inv_r), lam)
}

/// Σ 1/(λ_n − λ)² for the Dirac model at λ > 0, β ∈ [−∞, ∞].
fn dirac_real(nu: f64, ext: Extension, lam: f64) -> Result<f64> {
    let m = 1.0 - 2.0 * nu;
    let r = bessel_j(1.0 - nu, lam)? / bessel_j(-nu, lam)?;
    let t_inf = 1.0 - m * r / lam + r * r;
    let beta = match ext {
        Extension::Infinity => return finite_or_near(t_inf, lam),
        Extension::Finite(b) => b,
    };
    let u = bessel_j(nu - 1.0, lam)? / bessel_j(nu, lam)?;
    let d = m / lam + u + r;
    let dd = -m / (lam * lam) - m * (u + r) / lam + r * r - u * u;
    if beta == 0.0 {
        return finite_or_near(t_inf - dd, lam);
    }
    let f = lam * lam.powf(-2.0 * nu) * bessel_j(nu, lam)? / bessel_j(-nu, lam)?;
    let tau = f / (f - beta);
    finite_or_near(t_inf - tau * dd - tau * (1.0 - tau) * d * d, lam)
}

/// Σ 1/(λ_n − iy)² for the symmetric Dirac spectra β ∈ {0, ∞}.
fn dirac_imaginary(nu: f64, ext: Extension, y: f64) -> Result<f64> {
    let m = 1.0 - 2.0 * nu;
    let rho = bessel_i_scaled(1.0 - nu, y)? / bessel_i_scaled(-nu, y)?;
    let t_inf = 1.0 - m * rho / y - rho * rho;
    match ext {
        Extension::Infinity => Ok(t_inf),
        Extension::Finite(b) if b == 0.0 => {
            let omega = bessel_i_scaled(nu - 1.0, y)? / bessel_i_scaled(nu, y)?;
            let dd = m / (y * y) - m * (rho - omega) / y - rho * rho + omega * omega;
            Ok(t_inf - dd)
        }
        Extension::Finite(_) => Err(Error::Unsupported(
            "imaginary-axis Dirac trace is real only for the symmetric extensions β ∈ {0, ∞}".into(),
        )),
    }
}

/// Closed-form resolvent trace.
///
/// * interval: Σ 1/(λ_n − λ), the θ family as (1−τ)Tr_∞ + τTr_0
/// * oscillator: the finite difference Tr_θ − Tr_∞ (each trace diverges)
/// * Dirac: the squared resolvent Σ 1/(λ_n − λ)²
pub fn resolvent_trace_closed(model: &ModelSpec, ext: Extension, point: SpectralPoint) -> Result<f64> {
    let p = model.param();
    if model.kind() == ModelKind::Oscillator {
        return oscillator_trace_difference(p, ext, point.lambda());
    }
    let mu = positive(point)?;
    match model.kind() {
        ModelKind::Interval if p == 0.0 => finite_or_near(interval_log_trace(ext, point, mu)?, point.lambda()),
        ModelKind::Interval => {
            let (t_inf, t_zero) = interval_pair(p, point, mu)?;
            let value = match ext {
                Extension::Infinity => t_inf,
                Extension::Finite(t) if t == 0.0 => t_zero,
                Extension::Finite(_) => {
                    let tau = krein_factor(model, ext, point)?.tau;
                    (1.0 - tau) * t_inf + tau * t_zero
                }
            };
            finite_or_near(value, point.lambda())
        }
        ModelKind::Dirac => {
            let nu = 0.5 - p;
            match point {
                SpectralPoint::Real(lam) if lam > 0.0 => dirac_real(nu, ext, lam),
                SpectralPoint::Real(lam) => dirac_real(nu, ext.mirrored(), -lam),
                SpectralPoint::Imaginary(y) => dirac_imaginary(nu, ext, y),
            }
        }
        _ => Err(Error::Unsupported(format!("no closed-form resolvent trace for {model}"))),
    }
}

/// θ below which the oscillator acquires a negative eigenvalue:
/// −Γ(1−ν)Γ((1+ν)/2) / (Γ(1+ν)Γ((1−ν)/2)).
pub(crate) fn oscillator_threshold(nu: f64) -> Result<f64> {
    let (l1, _) = lgamma(1.0 - nu)?;
    let (l2, _) = lgamma(0.5 * (1.0 + nu))?;
    let (l3, _) = lgamma(1.0 + nu)?;
    let (l4, _) = lgamma(0.5 * (1.0 - nu))?;
    Ok(-(l1 + l2 - l3 - l4).exp())
}

/// Doubles the distance from the origin until the residual at −λ has the
/// sign `target`.
fn scan_negative(model: &ModelSpec, ext: Extension, start: f64, target: f64, index: i64) -> Result<SpectralBracket> {
    let mut inner = 0.0;
    let mut outer = start;
    for _ in 0..200 {
        let v = residual_terms(model, ext, -outer)?.normalized();
        if v.signum() == target {
            return Ok(SpectralBracket { lo: -outer, hi: -inner, index });
        }
        inner = outer;
        outer *= 2.0;
    }
    Err(Error::BracketFailure(format!("no sign change of the residual of {model} on the negative axis")))
}

/// Whether (model, ext) has a negative eigenvalue, with a bracket for it.
pub fn negative_mode_condition(model: &ModelSpec, ext: Extension) -> Result<NegativeMode> {
    let theta = match (model.kind(), ext) {
        (ModelKind::Oscillator | ModelKind::Interval, Extension::Infinity) => return Ok(NegativeMode::None),
        (ModelKind::Oscillator | ModelKind::Interval, Extension::Finite(t)) => t,
        _ => return Err(Error::Unsupported(format!("negative modes are defined for Schrödinger models, not {model}"))),
    };
    let nu = model.param();
    let exists = match model.kind() {
        ModelKind::Oscillator => theta < oscillator_threshold(nu)?,
        _ if nu == 0.0 => theta > 0.0,
        _ => theta < -1.0,
    };
    if !exists {
        return Ok(NegativeMode::None);
    }
    let bracket = match model.kind() {
        ModelKind::Oscillator => scan_negative(model, ext, 1.0, 1.0, 0)?,
        _ if nu == 0.0 => scan_negative(model, ext, 1.0, -1.0, 1)?,
        _ => scan_negative(model, ext, 1.0, 1.0, 1)?,
    };
    Ok(NegativeMode::Exists(bracket))
}
