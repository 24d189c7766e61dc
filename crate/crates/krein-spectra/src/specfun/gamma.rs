//! Gamma, log-Gamma and digamma for real arguments.

use std::f64::consts::PI;

use super::bernoulli::bernoulli_even;
use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// sin(πx) with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    if r > 0.5 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.5 {
        -(PI * (1.0 + r)).sin()
    } else {
        (PI * r).sin()
    }
}

/// cos(πx) with exact zeros at the half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn stirling_tail(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut acc = 0.0;
    for m in 1..=8 {
        let k = 2 * m;
        acc += bernoulli_even(m) / ((k * (k - 1)) as f64) * pow;
        pow *= inv2;
    }
    acc
}

fn lgamma_positive(x: f64) -> f64 {
    if x >= 15.0 {
        return (x - 0.5) * x.ln() - x + LN_SQRT_2PI + stirling_tail(x);
    }
    let mut y = x;
    let mut prod = 1.0;
    let mut log_prod = 0.0;
    while y < 15.0 {
        prod *= y;
        if prod > 1e280 {
            log_prod += prod.ln();
            prod = 1.0;
        }
        y += 1.0;
    }
    log_prod += prod.ln();
    lgamma_positive(y) - log_prod
}

/// log|Γ(x)| together with the sign of Γ(x).
pub fn lgamma(x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return Err(Error::domain("lgamma", format!("non-finite argument {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { function: "lgamma", at: x });
    }
    if x >= 0.5 {
        return Ok((lgamma_positive(x), 1.0));
    }
    let s = sin_pi(x);
    let value = PI.ln() - s.abs().ln() - lgamma_positive(1.0 - x);
    Ok((value, s.signum()))
}

/// Γ(x).
pub fn gamma(x: f64) -> Result<f64> {
    if x > 0.0 && x <= 20.0 && x == x.floor() {
        return Ok((1..x as u32).fold(1.0, |acc, k| acc * k as f64));
    }
    let (l, s) = lgamma(x)?;
    Ok(s * l.exp())
}

/// 1/Γ(x), an entire function; zero at the nonpositive integers.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    match lgamma(x) {
        Ok((l, s)) => s * (-l).exp(),
        Err(_) => f64::NAN,
    }
}

/// ln|1/Γ(x)| and sign of 1/Γ(x); sign 0 at the zeros.
pub fn log_rgamma(x: f64) -> (f64, f64) {
    if is_nonpositive_integer(x) {
        return (f64::NEG_INFINITY, 0.0);
    }
    match lgamma(x) {
        Ok((l, s)) => (-l, s),
        Err(_) => (f64::NAN, 0.0),
    }
}

/// Γ(x+a)/Γ(x+b) evaluated through log-Gamma differences.
pub fn gamma_ratio(num: f64, den: f64) -> Result<f64> {
    let (ln, sn) = lgamma(num)?;
    let (ld, sd) = lgamma(den)?;
    Ok(sn * sd * (ln - ld).exp())
}

fn digamma_positive(x: f64) -> f64 {
    let mut y = x;
    let mut shift = 0.0;
    while y < 10.0 {
        shift += 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut pow = inv2;
    let mut tail = 0.0;
    for m in 1..=8 {
        tail += bernoulli_even(m) / (2 * m) as f64 * pow;
        pow *= inv2;
    }
    y.ln() - 0.5 / y - tail - shift
}

/// ψ(x) = Γ'(x)/Γ(x).
pub fn digamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain("digamma", format!("non-finite argument {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { function: "digamma", at: x });
    }
    if x > 0.0 {
        return Ok(digamma_positive(x));
    }
    // ψ(x) = ψ(1-x) - π cot(πx)
    let cot = cos_pi(x) / sin_pi(x);
    Ok(digamma_positive(1.0 - x) - PI * cot)
}

/// ψ'(x) for x > 0.
pub fn trigamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("trigamma", format!("requires x > 0, got {x}")));
    }
    let mut y = x;
    let mut shift = 0.0;
    while y < 10.0 {
        shift += 1.0 / (y * y);
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut pow = inv * inv2;
    let mut tail = 0.0;
    for m in 1..=8 {
        tail += bernoulli_even(m) * pow;
        pow *= inv2;
    }
    Ok(shift + inv + 0.5 * inv2 + tail)
}
