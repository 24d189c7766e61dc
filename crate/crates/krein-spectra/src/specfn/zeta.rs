use super::continued::oscillator_continued;
use super::tail::{branch_sum, Summand};
use super::{check_tol, SpectralSample, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::models::{Branch, Extension, ModelKind, ModelSpec};
use crate::specfun::{hurwitz_zeta, riemann_zeta};
use crate::spectrum::negative_modes;

/// Tolerance of `eta`.
pub const ETA_TOL: f64 = 1e-10;

/// Abscissa of convergence of Σ λ^{−s} over the positive spectrum.
fn abscissa(model: &ModelSpec) -> f64 {
    match model.kind() {
        ModelKind::Oscillator | ModelKind::Dirac => 1.0,
        ModelKind::Interval => 0.5,
        ModelKind::AharonovBohm | ModelKind::Susy => 2.0,
    }
}

fn check_s(model: &ModelSpec, s: f64) -> Result<()> {
    let s0 = abscissa(model);
    if s.is_finite() && s > s0 {
        Ok(())
    } else {
        Err(Error::Divergent(format!("{} zeta sum needs s > {s0}, got {s}", model.kind().name())))
    }
}

/// Σ λ_n^{−s} over the positive eigenvalues (the positive branch of the
/// signed models). A negative eigenvalue is reported in `negative_mode`;
/// zero modes are skipped.
pub fn zeta_sum(model: &ModelSpec, ext: Extension, s: f64, tol: f64) -> Result<SpectralSample> {
    check_s(model, s)?;
    check_tol(tol)?;
    let sum = branch_sum(model, ext, Branch::Positive, &Summand::Power(s), tol, 64)?;
    let mut out = SpectralSample::new(s, sum.value, sum.bound, sum.terms);
    if !model.is_signed() {
        out.negative_mode = negative_modes(model, ext)?.first().map(|e| e.lambda.abs().powf(-s));
    }
    Ok(out)
}

/// η(s) = ζ₊^β(s) − ζ₊^{−β}(s) for the Dirac and supercharge models.
pub fn eta(model: &ModelSpec, ext: Extension, s: f64) -> Result<SpectralSample> {
    if !matches!(model.kind(), ModelKind::Dirac | ModelKind::Susy) {
        return Err(Error::Unsupported(format!("eta function of the {} model", model.kind().name())));
    }
    check_s(model, s)?;
    if ext == Extension::Infinity || ext.is_zero() {
        return Ok(SpectralSample::new(s, 0.0, 0.0, 0));
    }
    let plus = branch_sum(model, ext, Branch::Positive, &Summand::Power(s), 0.5 * ETA_TOL, 64)?;
    let minus = branch_sum(model, ext.mirrored(), Branch::Positive, &Summand::Power(s), 0.5 * ETA_TOL, 64)?;
    Ok(SpectralSample::new(s, plus.value - minus.value, plus.bound + minus.bound, plus.terms + minus.terms))
}

/// Analytically continued ζ(s).
///
/// The oscillator uses its eigenvalue expansion in n^{−ν} and 1/n to
/// `order`: Riemann-zeta images of the expansion terms plus a convergent
/// remainder series. Distinguished Aharonov–Bohm extensions use their
/// Hurwitz closed forms. Other models are only available in the region
/// where the direct sum converges.
pub fn zeta_continued(model: &ModelSpec, ext: Extension, s: f64, order: usize) -> Result<SpectralSample> {
    if !s.is_finite() {
        return Err(Error::InvalidParameter(format!("s must be finite, got {s}")));
    }
    match (model.kind(), ext) {
        (ModelKind::Oscillator, _) => oscillator_continued(model.param(), ext, s, order),
        (ModelKind::AharonovBohm, Extension::Finite(b)) if b == 0.0 => {
            let v = 2f64.powf(-s) * hurwitz_zeta(0.5 * s, model.param())?;
            Ok(SpectralSample::new(s, v, 0.0, 0))
        }
        (ModelKind::AharonovBohm, Extension::Infinity) => {
            Ok(SpectralSample::new(s, 2f64.powf(-s) * riemann_zeta(0.5 * s)?, 0.0, 0))
        }
        _ if s > abscissa(model) => zeta_sum(model, ext, s, DEFAULT_TOL),
        _ => Err(Error::InsufficientOrder(format!(
            "no eigenvalue expansion for the {} model reaches s = {s}",
            model.kind().name()
        ))),
    }
}
