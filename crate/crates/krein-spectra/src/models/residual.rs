//! Spectral residuals in entire-function form: zeros are exactly the
//! eigenvalues and the functions have no poles.

use std::f64::consts::{LN_2, PI};

use super::{gamma_quotient, interval_c, Extension, ModelKind, ModelSpec};
use crate::error::Result;
use crate::specfun::{bessel_i_scaled, bessel_j, bessel_k_scaled, bessel_y, lgamma, sin_pi, EULER_GAMMA};

/// factor · e^{log}; the factor carries the sign and any oscillation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Term {
    log: f64,
    factor: f64,
}

impl Term {
    const ZERO: Term = Term { log: f64::NEG_INFINITY, factor: 0.0 };

    fn linear(v: f64) -> Term {
        Term { log: 0.0, factor: v }
    }

    fn scaled(self, c: f64) -> Term {
        if c == 0.0 {
            return Term::ZERO;
        }
        Term { log: self.log + c.abs().ln(), factor: self.factor * c.signum() }
    }

    fn value(self) -> f64 {
        if self.factor == 0.0 {
            0.0
        } else {
            self.factor * self.log.exp()
        }
    }
}

/// 1/Γ(z) split into a smooth envelope and an oscillating factor.
fn rgamma_term(z: f64) -> Result<Term> {
    if z >= 0.5 {
        let (l, _) = lgamma(z)?;
        Ok(Term { log: -l, factor: 1.0 })
    } else {
        let (l, _) = lgamma(1.0 - z)?;
        Ok(Term { log: l - PI.ln(), factor: sin_pi(z) })
    }
}

/// A residual written as `first − second`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    first: Term,
    second: Term,
}

impl Residual {
    /// The entire-function value; may overflow far out on the real axis.
    pub fn value(&self) -> f64 {
        self.first.value() - self.second.value()
    }

    /// The value divided by a smooth positive envelope of both terms.
    /// Same zeros and signs as `value`, bounded in magnitude.
    pub fn normalized(&self) -> f64 {
        let (a, b) = (self.first, self.second);
        let m = match (a.factor == 0.0, b.factor == 0.0) {
            (true, true) => return 0.0,
            (false, true) => a.log,
            (true, false) => b.log,
            (false, false) => {
                let hi = a.log.max(b.log);
                hi + ((a.log - hi).exp() + (b.log - hi).exp()).ln()
            }
        };
        let part = |t: Term| if t.factor == 0.0 { 0.0 } else { t.factor * (t.log - m).exp() };
        part(a) - part(b)
    }
}

fn oscillator(nu: f64, ext: Extension, lam: f64) -> Result<Residual> {
    let x = lam / 4.0;
    let (a, b) = (0.5 * (1.0 - nu), 0.5 * (1.0 + nu));
    let q = gamma_quotient(nu);
    Ok(match ext {
        Extension::Finite(theta) => Residual {
            first: rgamma_term(a - x)?,
            second: if theta == 0.0 { Term::ZERO } else { rgamma_term(b - x)?.scaled(theta * q) },
        },
        Extension::Infinity => Residual { first: Term::ZERO, second: rgamma_term(b - x)?.scaled(q) },
    })
}

/// μ^{∓ν} J_{±ν}(μ), continuous at μ = 0.
pub(crate) fn bessel_power(order: f64, mu: f64) -> Result<f64> {
    if mu < 1e-10 {
        let (l, s) = lgamma(1.0 + order)?;
        return Ok(s * (-order * LN_2 - l).exp());
    }
    Ok(mu.powf(-order) * bessel_j(order, mu)?)
}

/// μ^{∓ν} e^{−μ} I_{±ν}(μ).
pub(crate) fn bessel_power_i(order: f64, mu: f64) -> Result<f64> {
    if mu < 1e-10 {
        return bessel_power(order, 0.0);
    }
    Ok(mu.powf(-order) * bessel_i_scaled(order, mu)?)
}

fn interval(nu: f64, ext: Extension, lam: f64) -> Result<Residual> {
    if nu == 0.0 {
        return interval_log(ext, lam);
    }
    let c = interval_c(nu);
    let (coef_first, coef_second) = match ext {
        Extension::Finite(theta) => (1.0, c * theta),
        Extension::Infinity => (0.0, c),
    };
    if lam >= 0.0 {
        let mu = lam.sqrt();
        Ok(Residual {
            first: Term::linear(coef_first * bessel_power(-nu, mu)?),
            second: Term::linear(coef_second * bessel_power(nu, mu)?),
        })
    } else {
        let mu = (-lam).sqrt();
        Ok(Residual {
            first: Term { log: mu, factor: coef_first * bessel_power_i(-nu, mu)? },
            second: Term { log: mu, factor: coef_second * bessel_power_i(nu, mu)? },
        })
    }
}

/// ν = 0: (θ + ln2 − γ − ln μ) J₀(μ) + (π/2) Y₀(μ), continued to λ < 0 by
/// (θ + ln2 − γ − ln μ) I₀(μ) − K₀(μ).
fn interval_log(ext: Extension, lam: f64) -> Result<Residual> {
    let (theta, scale) = match ext {
        Extension::Finite(t) => (t, 1.0),
        Extension::Infinity => (1.0, 0.0),
    };
    if lam == 0.0 {
        return Ok(Residual { first: Term::linear(theta), second: Term::ZERO });
    }
    let mu = lam.abs().sqrt();
    let log_part = theta + scale * (LN_2 - EULER_GAMMA - mu.ln());
    if lam > 0.0 {
        Ok(Residual {
            first: Term::linear(log_part * bessel_j(0.0, mu)?),
            second: Term::linear(-scale * 0.5 * PI * bessel_y(0.0, mu)?),
        })
    } else {
        Ok(Residual {
            first: Term { log: mu, factor: log_part * bessel_i_scaled(0.0, mu)? },
            second: Term { log: -mu, factor: scale * bessel_k_scaled(0.0, mu)? },
        })
    }
}

fn dirac(nu: f64, ext: Extension, lam: f64) -> Result<Residual> {
    let r = lam.abs();
    let (coef_first, coef_second) = match ext {
        Extension::Finite(beta) => (1.0, beta),
        Extension::Infinity => (0.0, 1.0),
    };
    Ok(Residual {
        first: Term::linear(coef_first * lam * bessel_power(nu, r)?),
        second: Term::linear(coef_second * bessel_power(-nu, r)?),
    })
}

fn aharonov_bohm(kappa: f64, ext: Extension, lam: f64) -> Result<Residual> {
    let y = lam * lam / 4.0;
    let (coef_first, w) = match ext {
        Extension::Finite(beta) => (1.0, beta / 4.0),
        Extension::Infinity => (0.0, 0.25),
    };
    Ok(Residual {
        first: if coef_first == 0.0 { Term::ZERO } else { rgamma_term(kappa - y)? },
        second: rgamma_term(1.0 - y)?.scaled(w * lam),
    })
}

fn susy(alpha: f64, ext: Extension, lam: f64) -> Result<Residual> {
    let y = lam * lam / 2.0;
    let (coef_first, w) = match ext {
        Extension::Finite(beta) => (1.0, beta / 2.0),
        Extension::Infinity => (0.0, 0.5),
    };
    Ok(Residual {
        first: if coef_first == 0.0 { Term::ZERO } else { rgamma_term(0.5 - alpha - y)? },
        second: rgamma_term(1.0 - y)?.scaled(-w * lam),
    })
}

pub(crate) fn residual_terms(model: &ModelSpec, ext: Extension, lam: f64) -> Result<Residual> {
    let p = model.param();
    match model.kind() {
        ModelKind::Oscillator => oscillator(p, ext, lam),
        ModelKind::Interval => interval(p, ext, lam),
        ModelKind::Dirac => dirac(0.5 - p, ext, lam),
        ModelKind::AharonovBohm => aharonov_bohm(p, ext, lam),
        ModelKind::Susy => susy(p, ext, lam),
    }
}

/// Entire-function spectral residual at the spectral variable `lam`
/// (λ for every model; for the interval λ = μ², negative values use the
/// modified Bessel continuation). Its zeros are the eigenvalues.
///
/// * oscillator: 1/Γ((1−ν)/2 − λ/4) − θ (Γ(ν)/Γ(−ν)) / Γ((1+ν)/2 − λ/4)
/// * interval: μ^ν J_{−ν}(μ) − θ c μ^{−ν} J_ν(μ), c = 4^ν Γ(ν)/Γ(−ν)
/// * Dirac: λ |λ|^{−ν} J_ν(|λ|) − β |λ|^ν J_{−ν}(|λ|)
/// * Aharonov–Bohm: 1/Γ(κ − λ²/4) − (β/4) λ / Γ(1 − λ²/4)
/// * supercharge: 1/Γ(1/2 − α − λ²/2) + (β/2) λ / Γ(1 − λ²/2)
///
/// At `Extension::Infinity` the coefficient of the extension parameter is
/// returned.
pub fn spectral_residual(model: &ModelSpec, ext: Extension, lam: f64) -> Result<f64> {
    Ok(residual_terms(model, ext, lam)?.value())
}

/// `spectral_residual` divided by a positive envelope; safe for large λ.
pub fn normalized_residual(model: &ModelSpec, ext: Extension, lam: f64) -> Result<f64> {
    Ok(residual_terms(model, ext, lam)?.normalized())
}
