use rayon::prelude::*;

use super::heat::{heat_cutoff, tail_majorant};
use super::{check_tol, pairwise_sum, SpectralSample};
use crate::error::{Error, Result};
use crate::models::{Extension, ModelSpec};
use crate::specfun::{digamma, kummer_u};
use crate::spectrum::eigenvalues_up_to;

/// (Φ, (−1)^F Φ)/‖Φ‖² for the supercharge eigenfunction at eigenvalue λ,
/// in closed form: −1/(1 − λ²ψ(−λ²/2) + λ²ψ((1−λ²)/2 − α)). Zero where a
/// digamma pole makes the Gamma prefactor vanish.
pub fn graded_weight(alpha: f64, lambda: f64) -> Result<f64> {
    let l2 = lambda * lambda;
    let y = 0.5 * l2;
    let psi = |x: f64| match digamma(x) {
        Ok(v) => Ok(Some(v)),
        Err(Error::Pole { .. }) => Ok(None),
        Err(e) => Err(e),
    };
    match (psi(-y)?, psi(0.5 - y - alpha)?) {
        (Some(p1), Some(p2)) => Ok(-1.0 / (1.0 - l2 * p1 + l2 * p2)),
        _ => Ok(0.0),
    }
}

/// ‖Φ‖² = ∫₀^∞ (φ₁² + φ₂²) dx with φ₁ = x^α e^{−x²/2} U(−λ²/2, α+1/2, x²)
/// and φ₂ = −(λ/√2) x^{α+1} e^{−x²/2} U(1−λ²/2, α+3/2, x²).
pub fn susy_norm_quadrature(alpha: f64, lambda: f64) -> Result<f64> {
    ModelSpec::susy(alpha)?;
    let y = 0.5 * lambda * lambda;
    let density = |x: f64| -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let z = x * x;
        let e = (-0.5 * z).exp();
        let p1 = x.powf(alpha) * e * kummer_u(-y, alpha + 0.5, z).unwrap_or(f64::NAN);
        let p2 = -lambda / std::f64::consts::SQRT_2
            * x.powf(alpha + 1.0)
            * e
            * kummer_u(1.0 - y, alpha + 1.5, z).unwrap_or(f64::NAN);
        p1 * p1 + p2 * p2
    };
    let top = (2.0 * y + 2.0).sqrt() + 7.0;
    let mut total = 0.0;
    let mut lo = 0.0;
    for hi in [0.5, 1.5, 3.0, top] {
        if hi <= lo {
            continue;
        }
        let out = quadrature::double_exponential::integrate(density, lo, hi, 1e-13);
        total += out.integral;
        lo = hi;
    }
    if total.is_finite() && total > 0.0 {
        Ok(total)
    } else {
        Err(Error::Numerical(format!("eigenfunction norm quadrature failed at lambda = {lambda}")))
    }
}

/// Z^F(t) = Tr (−1)^F e^{−tH} for the supercharge extension `ext`: the sum
/// over nonzero eigenvalues of e^{−tλ²} times the graded weight, plus 1 for
/// the zero mode of the extension at infinity.
pub fn graded_partition(alpha: f64, ext: Extension, t: f64, tol: f64) -> Result<SpectralSample> {
    let model = ModelSpec::susy(alpha)?;
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidParameter(format!("t must be positive, got {t}")));
    }
    check_tol(tol)?;
    // |weight| ≤ 1, so the heat majorant bounds the dropped terms.
    let cap = heat_cutoff(&model, t, tol);
    let stream = eigenvalues_up_to(&model, ext, cap.sqrt())?;
    let terms = stream
        .items
        .par_iter()
        .filter(|e| e.lambda != 0.0)
        .map(|e| Ok((-t * e.lambda * e.lambda).exp() * graded_weight(alpha, e.lambda)?))
        .collect::<Result<Vec<f64>>>()?;
    let zero_mode = if ext == Extension::Infinity { 1.0 } else { 0.0 };
    let bound = tail_majorant(&model, t, cap);
    Ok(SpectralSample::new(t, zero_mode + pairwise_sum(&terms), bound, terms.len()))
}

