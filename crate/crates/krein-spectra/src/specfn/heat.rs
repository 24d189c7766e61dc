use std::f64::consts::PI;

use rayon::prelude::*;

use super::{check_tol, pairwise_sum, SpectralSample};
use crate::error::{Error, Result};
use crate::models::{Branch, Extension, ModelKind, ModelSpec};
use crate::spectrum::eigenvalues_up_to;

/// Schrödinger models use e^{−tλ}; the signed models e^{−tλ²}.
fn heat_variable(model: &ModelSpec, lambda: f64) -> f64 {
    if model.is_signed() {
        lambda * lambda
    } else {
        lambda
    }
}

/// Bound on Σ_{E > Λ} e^{−tE} over all eigenvalues with heat variable E
/// beyond Λ: each branch has at most one eigenvalue per lattice bracket,
/// and bracket lower ends beyond Λ are spaced by at least δ(Λ).
pub(super) fn tail_majorant(model: &ModelSpec, t: f64, cap: f64) -> f64 {
    let delta = match model.kind() {
        ModelKind::Oscillator | ModelKind::AharonovBohm => 4.0,
        ModelKind::Susy => 2.0,
        ModelKind::Interval | ModelKind::Dirac => 1.8 * PI * cap.sqrt(),
    };
    let branches = if model.is_signed() { 2.0 } else { 1.0 };
    branches * (-t * cap).exp() * (1.0 + 1.0 / (-(-t * delta).exp_m1()))
}

/// Smallest heat-variable cutoff whose majorant is below `tol`.
pub(super) fn heat_cutoff(model: &ModelSpec, t: f64, tol: f64) -> f64 {
    let mut cap = (100.0f64).max(-tol.ln() / t);
    for _ in 0..200 {
        if tail_majorant(model, t, cap) <= tol {
            break;
        }
        cap *= 1.05;
    }
    cap
}

fn spectral_cutoff(model: &ModelSpec, cap: f64) -> f64 {
    if model.is_signed() {
        cap.sqrt()
    } else {
        cap
    }
}

fn check_t(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("t must be positive, got {t}")))
    }
}

/// Tr e^{−tA} within `tol`, negative modes included.
pub fn heat_trace(model: &ModelSpec, ext: Extension, t: f64, tol: f64) -> Result<SpectralSample> {
    check_t(t)?;
    check_tol(tol)?;
    let cap = heat_cutoff(model, t, tol);
    let stream = eigenvalues_up_to(model, ext, spectral_cutoff(model, cap))?;
    let terms: Vec<f64> = stream.items.par_iter().map(|e| (-t * heat_variable(model, e.lambda)).exp()).collect();
    Ok(SpectralSample::new(t, pairwise_sum(&terms), tail_majorant(model, t, cap), terms.len()))
}

/// Tr(e^{−tA_a} − e^{−tA_b}) summed over index-matched eigenvalue pairs.
pub fn heat_trace_diff(model: &ModelSpec, ext_a: Extension, ext_b: Extension, t: f64, tol: f64) -> Result<SpectralSample> {
    check_t(t)?;
    check_tol(tol)?;
    if ext_a == ext_b {
        return Ok(SpectralSample::new(t, 0.0, 0.0, 0));
    }
    let cap = heat_cutoff(model, t, 0.5 * tol);
    let cutoff = spectral_cutoff(model, cap);
    let a = eigenvalues_up_to(model, ext_a, cutoff)?;
    let b = eigenvalues_up_to(model, ext_b, cutoff)?;
    let mut terms = Vec::new();
    for branch in [Branch::Negative, Branch::Positive] {
        let side = |s: &crate::spectrum::EigenvalueStream| -> Vec<f64> {
            s.items.iter().filter(|e| e.branch == branch).map(|e| heat_variable(model, e.lambda)).collect()
        };
        let (xa, xb) = (side(&a), side(&b));
        let paired = xa.len().min(xb.len());
        terms.extend(xa.iter().zip(&xb).map(|(&ea, &eb)| (-t * eb).exp() * (-t * (ea - eb)).exp_m1()));
        terms.extend(xa[paired..].iter().map(|&e| (-t * e).exp()));
        terms.extend(xb[paired..].iter().map(|&e| -(-t * e).exp()));
    }
    Ok(SpectralSample::new(t, pairwise_sum(&terms), 2.0 * tail_majorant(model, t, cap), terms.len()))
}

/// The channels l < 0 of the Aharonov–Bohm heat-trace difference,
/// 2 Σ_{l<0} Σ_{n≥0} (e^{−4t(n+|l|+κ)} − e^{−4t(n+|l|)}), summed directly.
pub fn ab_graded_heat_sum(kappa: f64, t: f64, tol: f64) -> Result<SpectralSample> {
    ModelSpec::aharonov_bohm(kappa)?;
    check_t(t)?;
    check_tol(tol)?;
    let r = (-4.0 * t).exp();
    // Σ_{m>M} 2m r^m bounds every dropped term.
    let majorant = |m: f64| 2.0 * r.powf(m + 1.0) * ((m + 1.0) - m * r) / (1.0 - r).powi(2);
    let mut big_m = 1.0;
    while majorant(big_m) > tol {
        big_m *= 1.25;
        big_m = big_m.ceil();
    }
    let big_m = big_m as usize;
    let factor = (-4.0 * t * kappa).exp_m1();
    let terms: Vec<f64> = (1..=big_m)
        .into_par_iter()
        .map(|l| {
            let inner: Vec<f64> = (0..=big_m - l).map(|n| 2.0 * (-4.0 * t * (n + l) as f64).exp() * factor).collect();
            pairwise_sum(&inner)
        })
        .collect();
    Ok(SpectralSample::new(t, pairwise_sum(&terms), majorant(big_m as f64), big_m * (big_m + 1) / 2))
}
