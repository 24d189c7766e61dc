//! Hurwitz and Riemann zeta functions.

use std::f64::consts::PI;

use super::bernoulli::bernoulli_even;
use crate::error::{Error, Result};

fn euler_maclaurin(s: f64, q: f64) -> f64 {
    let n = 25 + s.abs().ceil() as usize;
    let head: f64 = (0..n).map(|k| (q + k as f64).powf(-s)).sum();
    let a = q + n as f64;
    let mut sum = head + a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s);
    // B_{2j}/(2j)! · s(s+1)…(s+2j-2) · a^{-s-2j+1}
    let mut poch = s;
    let mut fact = 2.0;
    let mut pow = a.powf(-s - 1.0);
    let inv2 = 1.0 / (a * a);
    for j in 1..=15 {
        let term = bernoulli_even(j) / fact * poch * pow;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
        let jf = j as f64;
        poch *= (s + 2.0 * jf - 1.0) * (s + 2.0 * jf);
        fact *= (2.0 * jf + 1.0) * (2.0 * jf + 2.0);
        pow *= inv2;
    }
    sum
}

/// Hermite's integral representation, valid for all s ≠ 1 and q > 0.
fn hermite(s: f64, q: f64) -> f64 {
    let f = |t: f64| {
        if t <= 0.0 {
            return 0.0;
        }
        (s * (t / q).atan()).sin() / ((q * q + t * t).powf(0.5 * s) * (2.0 * PI * t).exp_m1())
    };
    let upper = 12.0 + s.abs();
    let mut integral = 0.0;
    let cuts = [0.0, 0.25, 0.5, 1.0, 2.0, 3.5, 6.0, 9.0, upper];
    for w in cuts.windows(2) {
        integral += quadrature::integrate(f, w[0], w[1], 1e-17).integral;
    }
    0.5 * q.powf(-s) + q.powf(1.0 - s) / (s - 1.0) + 2.0 * integral
}

/// ζ_H(s, q) = Σ_{k≥0} (q+k)^{-s}, analytically continued in s.
pub fn hurwitz_zeta(s: f64, q: f64) -> Result<f64> {
    if s == 1.0 {
        return Err(Error::Pole { function: "hurwitz_zeta", at: s });
    }
    if !(q > 0.0) || !q.is_finite() || !s.is_finite() {
        return Err(Error::domain("hurwitz_zeta", format!("requires q > 0 and finite s, got s = {s}, q = {q}")));
    }
    if s >= 1.5 {
        return Ok(euler_maclaurin(s, q));
    }
    if q < 1.0 && s > 0.0 {
        return Ok(q.powf(-s) + hermite(s, q + 1.0));
    }
    if s <= 0.0 && q > 1.0 && q <= 64.0 {
        // the integral terms grow like q^{1−s}; evaluate at q − m ∈ (0, 1]
        let m = q.ceil() as usize - 1;
        let base = q - m as f64;
        let shift: f64 = (0..m).map(|k| (base + k as f64).powf(-s)).sum();
        return Ok(hermite(s, base) - shift);
    }
    Ok(hermite(s, q))
}

/// ζ(s).
pub fn riemann_zeta(s: f64) -> Result<f64> {
    hurwitz_zeta(s, 1.0)
}
