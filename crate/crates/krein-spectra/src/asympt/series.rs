use num_complex::Complex64;

use super::{AsymptoticSeries, SeriesTerm, Variable};
use crate::error::{Error, Result};
use crate::models::{ModelKind, ModelSpec};
use crate::specfun::{bernoulli_poly, hankel_symbol};

/// Coefficient series of the large-argument Bessel expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelSeries {
    pub p: AsymptoticSeries,
    pub q: AsymptoticSeries,
    /// Σ (2k−1)⟨ν,k−1⟩ (i/2z)^k with the powers of i reduced: odd k are
    /// tagged imaginary.
    pub t: AsymptoticSeries,
}

/// P, Q and T coefficient series in 1/z up to exponent `order`.
pub fn hankel_pq(nu: f64, order: usize) -> Result<HankelSeries> {
    if order > 20 {
        return Err(Error::InvalidParameter(format!("Hankel order must be at most 20, got {order}")));
    }
    let pow2 = |k: usize| 0.5f64.powi(k as i32);
    let sign = |k: usize| if k % 2 == 0 { 1.0 } else { -1.0 };
    let p = (0..=order / 2)
        .map(|k| SeriesTerm::real((2 * k) as f64, sign(k) * hankel_symbol(nu, 2 * k) * pow2(2 * k)))
        .collect();
    let q = (0..)
        .take_while(|k| 2 * k + 1 <= order)
        .map(|k| SeriesTerm::real((2 * k + 1) as f64, sign(k) * hankel_symbol(nu, 2 * k + 1) * pow2(2 * k + 1)))
        .collect();
    let t = (1..=order)
        .map(|k| {
            let mag = (2 * k - 1) as f64 * hankel_symbol(nu, k - 1) * pow2(k);
            // i^k = 1, i, −1, −i
            let phase = if k % 4 < 2 { 1.0 } else { -1.0 };
            SeriesTerm { exponent: k as f64, coefficient: phase * mag, imaginary: k % 2 == 1 }
        })
        .collect();
    Ok(HankelSeries {
        p: AsymptoticSeries::new(Variable::InvLambda, p)?,
        q: AsymptoticSeries::new(Variable::InvLambda, q)?,
        t: AsymptoticSeries::new(Variable::InvLambda, t)?,
    })
}

/// Σ_k ⟨m,k⟩ (−i/2)^k w^k truncated after w^len−1.
fn hankel_ratio_part(m: f64, len: usize) -> Vec<Complex64> {
    let mut step = Complex64::new(1.0, 0.0);
    let h = Complex64::new(0.0, -0.5);
    (0..len)
        .map(|k| {
            let c = step * hankel_symbol(m, k);
            step *= h;
            c
        })
        .collect()
}

/// Power-series quotient a/b, b₀ ≠ 0.
fn series_div(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(0.0, 0.0); a.len()];
    for n in 0..a.len() {
        let acc = (1..=n.min(b.len() - 1)).fold(a[n], |acc, k| acc - b[k] * c[n - k]);
        c[n] = acc / b[0];
    }
    c
}

fn tagged(k: usize, c: Complex64) -> SeriesTerm {
    let imaginary = k % 2 == 1;
    let coefficient = if imaginary { c.im } else { c.re };
    debug_assert!(
        (if imaginary { c.re } else { c.im }).abs() <= 1e-9 * (1.0 + coefficient.abs()),
        "A_{k} has the wrong parity"
    );
    SeriesTerm { exponent: k as f64, coefficient, imaginary }
}

/// Large-|λ| coefficients A_k of the resolvent trace on the upper
/// imaginary axis (σ = +1): Σ A_k μ^{−k} for the interval, the squared
/// trace Σ A_k λ^{−k} for the Dirac model. Odd k are imaginary.
///
/// `nu` is the Bessel order; use −ν for the θ = 0 (β = 0) extension.
pub fn resolvent_asymptotic_coeffs(model: &ModelSpec, nu: f64, order: usize) -> Result<AsymptoticSeries> {
    if order > 12 {
        return Err(Error::InvalidParameter(format!("resolvent order must be at most 12, got {order}")));
    }
    let len = order + 1;
    let terms = match model.kind() {
        ModelKind::Interval => {
            let ratio = series_div(&hankel_ratio_part(nu - 1.0, len), &hankel_ratio_part(nu, len));
            (1..=order)
                .map(|k| {
                    let mut c = Complex64::new(0.0, 0.5) * ratio[k - 1];
                    if k == 2 {
                        c += nu;
                    }
                    tagged(k, c)
                })
                .collect()
        }
        ModelKind::Dirac => {
            let ratio = series_div(&hankel_ratio_part(1.0 - nu, len), &hankel_ratio_part(-nu, len));
            (2..=order).map(|k| tagged(k, -((k - 1) as f64) * Complex64::new(0.0, 1.0) * ratio[k - 1])).collect()
        }
        _ => return Err(Error::Unsupported(format!("resolvent coefficients for the {} model", model.kind().name()))),
    };
    AsymptoticSeries::new(Variable::InvLambda, terms)
}

/// a_m(ν) = 16^m B_{2m+1}((1+ν)/2) / (m(2m+1)), m = 1..=m_max, so that
/// Γ((1−ν)/2 + z/4)/Γ((1+ν)/2 + z/4) ~ (z/4)^{−ν} exp(Σ a_m z^{−2m}).
pub fn gamma_ratio_coeffs(nu: f64, m_max: usize) -> Result<Vec<f64>> {
    if m_max > 15 {
        return Err(Error::InvalidParameter(format!("m_max must be at most 15, got {m_max}")));
    }
    let x = 0.5 * (1.0 + nu);
    Ok((1..=m_max)
        .map(|m| 16f64.powi(m as i32) * bernoulli_poly(2 * m + 1, x) / (m * (2 * m + 1)) as f64)
        .collect())
}

fn common_step(exponents: &[f64]) -> Option<f64> {
    let min = exponents.iter().copied().fold(f64::INFINITY, f64::min);
    (1..=24).map(|d| min / d as f64).find(|&h| {
        exponents.iter().all(|&e| {
            let r = e / h;
            (r - r.round()).abs() < 1e-9
        })
    })
}

/// Coefficients of exp(f) where f has no constant term, up to the
/// `n_max`-th multiple of the common exponent step.
pub fn series_exp(input: &AsymptoticSeries, n_max: usize) -> Result<AsymptoticSeries> {
    let terms: Vec<&SeriesTerm> = input.terms().iter().filter(|t| t.coefficient != 0.0).collect();
    if terms.iter().any(|t| t.imaginary) {
        return Err(Error::InvalidParameter("series_exp needs real coefficients".into()));
    }
    if terms.is_empty() {
        return AsymptoticSeries::new(input.variable, vec![SeriesTerm::real(0.0, 1.0)]);
    }
    let exps: Vec<f64> = terms.iter().map(|t| t.exponent).collect();
    if exps.iter().any(|&e| e <= 0.0) {
        return Err(Error::InvalidParameter("series_exp input must have positive exponents".into()));
    }
    let step = common_step(&exps)
        .ok_or_else(|| Error::InvalidParameter("exponents are not multiples of a common step".into()))?;
    let mut a = vec![0.0; n_max + 1];
    for t in &terms {
        let k = (t.exponent / step).round() as usize;
        if k <= n_max {
            a[k] += t.coefficient;
        }
    }
    let mut g = vec![0.0; n_max + 1];
    g[0] = 1.0;
    for n in 1..=n_max {
        g[n] = (1..=n).map(|k| k as f64 * a[k] * g[n - k]).sum::<f64>() / n as f64;
    }
    let out = g.iter().enumerate().map(|(k, &c)| SeriesTerm::real(k as f64 * step, c)).collect();
    AsymptoticSeries::new(input.variable, out)
}
