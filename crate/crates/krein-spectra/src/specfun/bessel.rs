//! Bessel functions J, Y, I, K of real order and positive argument.

use std::f64::consts::{FRAC_2_PI, PI};

use super::gamma::{cos_pi, digamma, rgamma, sin_pi, EULER_GAMMA};
use super::hankel::hankel_pq;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BesselKind {
    J,
    Y,
    I,
    K,
}

const SERIES_MAX: f64 = 8.0;
const I_SERIES_MAX: f64 = 35.0;

fn hankel_threshold(nu: f64) -> f64 {
    25f64.max(nu * nu)
}

fn is_integer(nu: f64) -> bool {
    nu == nu.round()
}

fn check_arg(function: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(function, format!("requires x > 0, got {x}")))
    }
}

/// Power series Σ s^k (x/2)^{2k+ν} / (k! Γ(k+ν+1)) with s = -1 (J) or +1 (I),
/// multiplied by e^{-shift}.
fn power_series(nu: f64, x: f64, sign: f64, shift: f64) -> f64 {
    let half = 0.5 * x;
    let lead = (nu * half.ln() - shift).exp();
    let q = sign * half * half;
    let mut k0 = 0usize;
    // first k with k+ν+1 not a pole of Γ
    while rgamma(k0 as f64 + nu + 1.0) == 0.0 {
        k0 += 1;
    }
    let mut term = lead * q.powi(k0 as i32) * rgamma(k0 as f64 + nu + 1.0)
        / (1..=k0).fold(1.0, |a, j| a * j as f64);
    let mut sum = term;
    let mut k = k0;
    loop {
        k += 1;
        term *= q / (k as f64 * (k as f64 + nu));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() && k as f64 > half {
            break;
        }
        if k > 500 {
            break;
        }
    }
    sum
}

/// J_{ν0+k}(x), k = 0..=kmax, by Miller's backward recurrence (ν0 ∈ [0,1)).
fn miller_j(nu0: f64, x: f64, kmax: usize) -> Vec<f64> {
    let start = kmax.max(x as usize) + 40 + (x.sqrt() * 4.0) as usize;
    let start = start + start % 2;
    let mut f = vec![0.0; start + 2];
    f[start] = 1e-300;
    for k in (1..=start).rev() {
        f[k - 1] = 2.0 * (nu0 + k as f64) / x * f[k] - f[k + 1];
        if f[k - 1].abs() > 1e250 {
            for v in f.iter_mut().skip(k - 1) {
                *v *= 1e-250;
            }
        }
    }
    // Σ c_j J_{ν0+2j} = (x/2)^{ν0}, c_0 = Γ(ν0+1), c_j = (ν0+2j)Γ(ν0+j)/j!
    let g1 = 1.0 / rgamma(nu0 + 1.0);
    let mut norm = g1 * f[0];
    let mut g = g1;
    let mut j = 1usize;
    while 2 * j <= start {
        norm += (nu0 + 2.0 * j as f64) * g * f[2 * j];
        g *= (nu0 + j as f64) / (j + 1) as f64;
        j += 1;
    }
    let scale = (0.5 * x).powf(nu0) / norm;
    f.truncate(kmax + 1);
    f.iter_mut().for_each(|v| *v *= scale);
    f
}

fn j_miller(nu: f64, x: f64) -> f64 {
    let base = nu.floor();
    let nu0 = nu - base;
    if base >= 0.0 {
        let m = base as usize;
        miller_j(nu0, x, m.max(1))[m]
    } else {
        let v = miller_j(nu0, x, 1);
        let (mut hi, mut lo) = (v[1], v[0]);
        let mut order = nu0;
        while order > nu + 0.5 {
            let next = 2.0 * order / x * lo - hi;
            hi = lo;
            lo = next;
            order -= 1.0;
        }
        lo
    }
}

/// J_ν(x) for x > 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check_arg("bessel_j", x)?;
    if nu < 0.0 && is_integer(nu) {
        let n = -nu;
        let s = if (n as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(s * bessel_j(n, x)?);
    }
    if x >= hankel_threshold(nu) {
        let (p, q) = hankel_pq(nu, x);
        let w = x - (0.5 * nu + 0.25) * PI;
        let (s, c) = w.sin_cos();
        return Ok((FRAC_2_PI / x).sqrt() * (p * c - q * s));
    }
    if x <= SERIES_MAX {
        return Ok(power_series(nu, x, -1.0, 0.0));
    }
    Ok(j_miller(nu, x))
}

fn y_integer_small(n: u32, x: f64) -> f64 {
    // Neumann expansion with Miller values of J_k
    let terms = (x as usize) + 60;
    let js = miller_j(0.0, x, n as usize + 2 * terms + 2);
    let half = 0.5 * x;
    let mut finite = 0.0;
    if n > 0 {
        let mut fact_k = 1.0;
        for k in 0..n {
            if k > 0 {
                fact_k *= k as f64;
            }
            finite += half.powi(k as i32) * js[k as usize] / ((n - k) as f64 * fact_k);
        }
        let fact_n = (1..=n).fold(1.0, |a, j| a * j as f64);
        finite *= -fact_n * half.powi(-(n as i32)) / PI;
    }
    let psi = digamma(n as f64 + 1.0).unwrap_or(-EULER_GAMMA);
    let log_part = FRAC_2_PI * (half.ln() - psi) * js[n as usize];
    let mut tail = 0.0;
    for k in 1..=terms {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let kf = k as f64;
        tail += sign * (n as f64 + 2.0 * kf) * js[n as usize + 2 * k] / (kf * (n as f64 + kf));
    }
    finite + log_part - FRAC_2_PI * tail
}

/// Y_ν(x) for x > 0.
pub fn bessel_y(nu: f64, x: f64) -> Result<f64> {
    check_arg("bessel_y", x)?;
    if x >= hankel_threshold(nu) {
        let (p, q) = hankel_pq(nu, x);
        let w = x - (0.5 * nu + 0.25) * PI;
        let (s, c) = w.sin_cos();
        return Ok((FRAC_2_PI / x).sqrt() * (p * s + q * c));
    }
    if is_integer(nu) {
        let n = nu.abs() as u32;
        let sign = if nu < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        if n <= 1 {
            return Ok(sign * y_integer_small(n, x));
        }
        let (mut y0, mut y1) = (y_integer_small(0, x), y_integer_small(1, x));
        for k in 1..n {
            let y2 = 2.0 * k as f64 / x * y1 - y0;
            y0 = y1;
            y1 = y2;
        }
        return Ok(sign * y1);
    }
    let jp = bessel_j(nu, x)?;
    let jm = bessel_j(-nu, x)?;
    Ok((jp * cos_pi(nu) - jm) / sin_pi(nu))
}

/// e^{-x} I_ν(x) for x > 0.
pub fn bessel_i_scaled(nu: f64, x: f64) -> Result<f64> {
    check_arg("bessel_i", x)?;
    if nu < 0.0 && is_integer(nu) {
        return bessel_i_scaled(-nu, x);
    }
    if x <= I_SERIES_MAX.max(nu * nu) {
        return Ok(power_series(nu, x, 1.0, x));
    }
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= -(mu - odd * odd) / (8.0 * k as f64 * x);
        if term.abs() > last || term == 0.0 {
            break;
        }
        sum += term;
        last = term.abs();
        if last < 1e-17 * sum.abs() {
            break;
        }
    }
    Ok(sum / (2.0 * PI * x).sqrt())
}

/// I_ν(x) for x > 0.
pub fn bessel_i(nu: f64, x: f64) -> Result<f64> {
    Ok(bessel_i_scaled(nu, x)? * x.exp())
}

/// e^{x} K_ν(x) for x > 0, by the trapezoidal rule on ∫_0^∞ e^{-x(cosh t-1)} cosh(νt) dt.
pub fn bessel_k_scaled(nu: f64, x: f64) -> Result<f64> {
    check_arg("bessel_k", x)?;
    let h = 0.05;
    let mut sum = 0.5;
    let mut k = 1usize;
    loop {
        let t = h * k as f64;
        let arg = -x * (t.cosh() - 1.0);
        let v = (arg + nu.abs() * t).exp() * 0.5 * (1.0 + (-2.0 * nu.abs() * t).exp());
        sum += v;
        if v < 1e-18 * sum || k > 100_000 {
            break;
        }
        k += 1;
    }
    Ok(h * sum)
}

/// K_ν(x) for x > 0.
pub fn bessel_k(nu: f64, x: f64) -> Result<f64> {
    Ok(bessel_k_scaled(nu, x)? * (-x).exp())
}

/// Value and x-derivative of the Bessel function of the given kind.
pub fn bessel(kind: BesselKind, nu: f64, x: f64) -> Result<(f64, f64)> {
    let (f, g): (fn(f64, f64) -> Result<f64>, f64) = match kind {
        BesselKind::J => (bessel_j, 1.0),
        BesselKind::Y => (bessel_y, 1.0),
        BesselKind::I => (bessel_i, 1.0),
        BesselKind::K => (bessel_k, -1.0),
    };
    let v = f(nu, x)?;
    let lower = f(nu - 1.0, x)?;
    Ok((v, g * lower - nu / x * v))
}
