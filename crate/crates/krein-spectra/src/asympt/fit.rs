use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLawFit {
    pub exponent: f64,
    pub coefficient: f64,
    /// Standard error of the exponent.
    pub stderr: f64,
}

/// Twelve log-spaced nodes on [1e−3, 1e−2].
pub fn default_fit_window() -> Vec<f64> {
    (0..12).map(|i| 10f64.powf(-3.0 + i as f64 / 11.0)).collect()
}

/// Least-squares fit of y = c·t^p on (log t, log|y|).
pub fn fit_power_law(samples: &[(f64, f64)]) -> Result<PowerLawFit> {
    if samples.len() < 5 {
        return Err(Error::InvalidParameter(format!("need at least 5 samples, got {}", samples.len())));
    }
    if samples.iter().any(|&(t, y)| !(t > 0.0) || !t.is_finite() || !y.is_finite() || y == 0.0) {
        return Err(Error::InvalidParameter("samples need t > 0 and finite nonzero y".into()));
    }
    let sign = samples[0].1.signum();
    if samples.iter().any(|&(_, y)| y.signum() != sign) {
        return Err(Error::SignMixing);
    }
    let (tmin, tmax) = samples.iter().fold((f64::INFINITY, 0f64), |(lo, hi), &(t, _)| (lo.min(t), hi.max(t)));
    if tmax / tmin < 10.0 * (1.0 - 1e-12) {
        return Err(Error::InvalidParameter("samples must span at least one decade in t".into()));
    }
    let pts: Vec<(f64, f64)> = samples.iter().map(|&(t, y)| (t.ln(), y.abs().ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = pts.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    let stderr = (rss / (n - 2.0) / sxx).sqrt();
    Ok(PowerLawFit { exponent: slope, coefficient: sign * intercept.exp(), stderr })
}
