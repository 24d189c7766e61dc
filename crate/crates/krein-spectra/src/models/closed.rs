//! Closed-form spectra of the distinguished extensions.

use super::{Branch, Extension, ModelKind, ModelSpec};
use crate::error::{Error, Result};
use crate::specfun::bessel_j_zero;

/// First admissible index on a branch.
///
/// Oscillator indices start at 0 and interval indices at 1. Dirac branches
/// start at 1 except for the zero mode of β = 0, which is index 0 of the
/// positive branch. Aharonov–Bohm and supercharge branches start at 0,
/// except that at β = ∞ the zero mode belongs to the positive branch and
/// the negative branch starts at 1.
pub fn first_index(model: &ModelSpec, ext: Extension, branch: Branch) -> Result<usize> {
    match (model.kind(), branch) {
        (ModelKind::Oscillator, Branch::Positive) => Ok(0),
        (ModelKind::Interval, Branch::Positive) => Ok(1),
        (ModelKind::Oscillator | ModelKind::Interval, Branch::Negative) => {
            Err(Error::Unsupported(format!("{model} has no negative branch")))
        }
        (ModelKind::Dirac, Branch::Positive) if ext.is_zero() => Ok(0),
        (ModelKind::Dirac, _) => Ok(1),
        (_, Branch::Negative) if ext == Extension::Infinity => Ok(1),
        _ => Ok(0),
    }
}

fn check_index(model: &ModelSpec, ext: Extension, branch: Branch, n: usize) -> Result<()> {
    let first = first_index(model, ext, branch)?;
    if n < first {
        return Err(Error::InvalidParameter(format!(
            "index {n} below first index {first} of the {branch:?} branch of {model} at extension {ext}"
        )));
    }
    Ok(())
}

/// Eigenvalue number `n` on `branch` for a distinguished extension.
pub fn closed_form_eigenvalue(model: &ModelSpec, ext: Extension, n: usize, branch: Branch) -> Result<f64> {
    if !ext.is_distinguished(model) {
        return Err(Error::NotDistinguished(ext.to_string()));
    }
    check_index(model, ext, branch, n)?;
    let p = model.param();
    let nf = n as f64;
    let sign = branch.sign();
    let zero = |order: f64| bessel_j_zero(order, n);
    Ok(match (model.kind(), ext) {
        (ModelKind::Oscillator, Extension::Infinity) => 4.0 * (nf + 0.5 + 0.5 * p),
        (ModelKind::Oscillator, _) => 4.0 * (nf + 0.5 - 0.5 * p),
        (ModelKind::Interval, Extension::Infinity) => zero(p)?.powi(2),
        (ModelKind::Interval, _) => zero(-p)?.powi(2),
        (ModelKind::Dirac, Extension::Infinity) => sign * zero(-(0.5 - p))?,
        (ModelKind::Dirac, _) if n == 0 => 0.0,
        (ModelKind::Dirac, _) => sign * zero(0.5 - p)?,
        (ModelKind::AharonovBohm, Extension::Infinity) => sign * 2.0 * nf.sqrt(),
        (ModelKind::AharonovBohm, _) => sign * 2.0 * (nf + p).sqrt(),
        (ModelKind::Susy, Extension::Infinity) => sign * (2.0 * nf).sqrt(),
        (ModelKind::Susy, _) => sign * (2.0 * nf + 1.0 - 2.0 * p).sqrt(),
    })
}

/// Graded heat trace of the Aharonov–Bohm l = 0 channel pair,
/// −e^{−2κt} sinh(2κt)/sinh²(2t).
pub fn graded_heat_closed_ab(kappa: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain("graded_heat_closed_ab", format!("requires t > 0, got {t}")));
    }
    // written with decaying exponentials only
    let e = (-4.0 * t).exp();
    let num = 0.5 * (1.0 - (-4.0 * kappa * t).exp());
    Ok(-num * 4.0 * e / ((1.0 - e) * (1.0 - e)))
}
