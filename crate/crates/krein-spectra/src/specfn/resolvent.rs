use super::tail::{branch_sum, Summand};
use super::{check_tol, SpectralSample};
use crate::error::{Error, Result};
use crate::models::{Branch, Extension, ModelKind, ModelSpec, SpectralPoint};
use crate::spectrum::first_eigenvalues;

/// Smallest admissible distance between the argument and the spectrum.
const MIN_DISTANCE: f64 = 1e-6;

fn check_distance(model: &ModelSpec, ext: Extension, branch: Branch, z: f64) -> Result<()> {
    let eig = first_eigenvalues(model, ext, branch, 64)?;
    match eig.iter().map(|e| (e.lambda - z).abs()).min_by(f64::total_cmp) {
        Some(d) if d < MIN_DISTANCE => Err(Error::NearEigenvalue { at: z, distance: d }),
        _ => Ok(()),
    }
}

/// Spectral sum of the resolvent trace.
///
/// Interval: Σ 1/(λ_n − λ) with λ = μ² (`Real(μ)`) or −μ² (`Imaginary(μ)`).
/// Dirac: the squared trace Σ 1/(λ_n − λ)² over both branches, at real λ
/// or at λ = iy for the symmetric extensions β ∈ {0, ∞}, where the sum is
/// real. First-power sums of the other models diverge.
pub fn resolvent_trace_sum(model: &ModelSpec, ext: Extension, point: SpectralPoint, tol: f64) -> Result<SpectralSample> {
    check_tol(tol)?;
    match model.kind() {
        ModelKind::Interval => {
            let z = point.lambda();
            check_distance(model, ext, Branch::Positive, z)?;
            let f = move |l: f64| 1.0 / (l - z);
            let sum = branch_sum(model, ext, Branch::Positive, &Summand::Map(&f), tol, 256)?;
            Ok(SpectralSample::new(point.magnitude(), sum.value, sum.bound, sum.terms))
        }
        ModelKind::Dirac => {
            let f: Box<dyn Fn(f64) -> f64 + Sync> = match point {
                SpectralPoint::Real(z) => {
                    for branch in [Branch::Positive, Branch::Negative] {
                        check_distance(model, ext, branch, z)?;
                    }
                    Box::new(move |l: f64| (l - z).powi(-2))
                }
                SpectralPoint::Imaginary(y) => {
                    if !(ext == Extension::Infinity || ext.is_zero()) {
                        return Err(Error::Unsupported(
                            "imaginary arguments need a symmetric extension (beta = 0 or inf)".into(),
                        ));
                    }
                    if y == 0.0 {
                        return Err(Error::InvalidParameter("imaginary argument must be nonzero".into()));
                    }
                    Box::new(move |l: f64| {
                        let (l2, y2) = (l * l, y * y);
                        (l2 - y2) / (l2 + y2).powi(2)
                    })
                }
            };
            let pos = branch_sum(model, ext, Branch::Positive, &Summand::Map(&*f), 0.5 * tol, 256)?;
            let neg = branch_sum(model, ext, Branch::Negative, &Summand::Map(&*f), 0.5 * tol, 256)?;
            Ok(SpectralSample::new(point.magnitude(), pos.value + neg.value, pos.bound + neg.bound, pos.terms + neg.terms))
        }
        _ => Err(Error::Divergent(format!(
            "resolvent trace sum of the {} model does not converge",
            model.kind().name()
        ))),
    }
}
