//! Continuation of the oscillator zeta function through its eigenvalue
//! expansion λ_n = 4(n + a + δ_n), δ_n a double series in n^{−ν} and 1/n.

use std::f64::consts::PI;

use super::{pairwise_sum, SpectralSample};
use crate::error::{Error, Result};
use crate::models::{gamma_quotient, Branch, Extension, ModelSpec};
use crate::specfun::{bernoulli_poly, cos_pi, hurwitz_zeta, riemann_zeta, sin_pi};
use crate::spectrum::first_eigenvalues;

/// Eigenvalues summed exactly before the tail estimate takes over.
const REMAINDER_TERMS: usize = 4000;

/// Σ c_{jk} U^j W^k truncated to νj + k ≤ order.
#[derive(Debug, Clone)]
struct Double {
    nu: f64,
    order: f64,
    jmax: usize,
    kmax: usize,
    c: Vec<f64>,
}

impl Double {
    fn zero(nu: f64, order: f64) -> Self {
        let jmax = (order / nu + 1e-9).floor() as usize;
        let kmax = (order + 1e-9).floor() as usize;
        Double { nu, order, jmax, kmax, c: vec![0.0; (jmax + 1) * (kmax + 1)] }
    }

    fn kept(&self, j: usize, k: usize) -> bool {
        self.nu * j as f64 + k as f64 <= self.order + 1e-9
    }

    fn idx(&self, j: usize, k: usize) -> usize {
        j * (self.kmax + 1) + k
    }

    fn get(&self, j: usize, k: usize) -> f64 {
        self.c[self.idx(j, k)]
    }

    fn monomial(&self, j: usize, k: usize, v: f64) -> Self {
        let mut out = Double::zero(self.nu, self.order);
        if j <= out.jmax && k <= out.kmax && out.kept(j, k) {
            let i = out.idx(j, k);
            out.c[i] = v;
        }
        out
    }

    fn scale(&self, v: f64) -> Self {
        Double { c: self.c.iter().map(|x| x * v).collect(), ..self.clone() }
    }

    fn add(&self, o: &Self) -> Self {
        Double { c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect(), ..self.clone() }
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out = Double::zero(self.nu, self.order);
        for j1 in 0..=self.jmax {
            for k1 in 0..=self.kmax {
                let a = self.get(j1, k1);
                if a == 0.0 {
                    continue;
                }
                for j2 in 0..=self.jmax - j1 {
                    for k2 in 0..=self.kmax - k1 {
                        let b = o.get(j2, k2);
                        if b != 0.0 && out.kept(j1 + j2, k1 + k2) {
                            let i = out.idx(j1 + j2, k1 + k2);
                            out.c[i] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0.0)
    }

    /// Σ_i coeffs[i] X^i for X without constant term.
    fn compose(&self, coeffs: impl Fn(usize) -> f64) -> Self {
        let mut out = self.monomial(0, 0, coeffs(0));
        let mut power = self.monomial(0, 0, 1.0);
        for i in 1..=self.jmax + self.kmax + 1 {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            out = out.add(&power.scale(coeffs(i)));
        }
        out
    }

    /// (νj + k, coefficient) pairs.
    fn terms(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        (0..=self.jmax).flat_map(move |j| {
            (0..=self.kmax)
                .filter(move |&k| self.kept(j, k))
                .map(move |k| (self.nu * j as f64 + k as f64, self.get(j, k)))
        })
    }
}

fn binomial(p: f64) -> impl Fn(usize) -> f64 {
    move |i| (0..i).fold(1.0, |acc, r| acc * (p - r as f64) / (r + 1) as f64)
}

fn exp_coeff(i: usize) -> f64 {
    (1..=i).fold(1.0, |acc, r| acc / r as f64)
}

fn atan_coeff(i: usize) -> f64 {
    if i % 2 == 0 {
        0.0
    } else if (i / 2) % 2 == 0 {
        1.0 / i as f64
    } else {
        -1.0 / i as f64
    }
}

/// δ_n as a double series; zero for the distinguished extensions.
fn phase_series(nu: f64, g: f64, order: f64) -> Double {
    let base = Double::zero(nu, order);
    let (u_mono, w) = (base.monomial(1, 0, 1.0), base.monomial(0, 1, 1.0));
    let c: Vec<f64> = (1..=base.kmax)
        .map(|m| {
            let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
            sign * (bernoulli_poly(m + 1, 1.0 - nu) - bernoulli_poly(m + 1, 1.0)) / (m * (m + 1)) as f64
        })
        .collect();
    let (sn, cs) = (sin_pi(nu), cos_pi(nu));
    let mut delta = base.clone();
    for _ in 0..base.jmax + base.kmax + 3 {
        let y = delta.mul(&w);
        let mut s = base.clone();
        for (m, cm) in c.iter().enumerate() {
            let wm = (0..=m).fold(base.monomial(0, 0, 1.0), |acc, _| acc.mul(&w));
            s = s.add(&wm.mul(&y.compose(binomial(-((m + 1) as f64)))).scale(*cm));
        }
        let u = u_mono.mul(&y.compose(binomial(-nu))).mul(&s.compose(exp_coeff)).scale(-g);
        let ratio = u.scale(sn).mul(&u.scale(cs).compose(|i| if i % 2 == 0 { 1.0 } else { -1.0 }));
        let next = ratio.compose(atan_coeff).scale(1.0 / PI);
        let change = next.c.iter().zip(&delta.c).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        delta = next;
        if change == 0.0 {
            break;
        }
    }
    delta
}

/// (λ_n/4)^{−s} n^{s} = Σ e_{jk} n^{−νj−k}.
fn power_series(delta: &Double, offset: f64, s: f64) -> Vec<(f64, f64)> {
    let x = delta.add(&delta.monomial(0, 0, offset)).mul(&delta.monomial(0, 1, 1.0));
    x.compose(binomial(-s)).terms().filter(|&(_, c)| c != 0.0).collect()
}

/// Limit of c(s)ζ(s + e) where s + e = 1 and c vanishes: c'(s). The
/// coefficient is a polynomial in s, so a fourth-order difference is exact
/// to rounding. `None` when c does not vanish and the pole is real.
fn removable_image(delta: &Double, offset: f64, s: f64, e: f64, c: f64) -> Option<f64> {
    let coeff = |s: f64| {
        power_series(delta, offset, s).into_iter().find(|&(ex, _)| (ex - e).abs() < 1e-12).map_or(0.0, |(_, c)| c)
    };
    let h = 1e-3;
    let d1 = coeff(s + h) - coeff(s - h);
    let d2 = coeff(s + 2.0 * h) - coeff(s - 2.0 * h);
    let slope = (8.0 * d1 - d2) / (12.0 * h);
    (c.abs() <= 1e-9 * slope.abs().max(1.0)).then_some(slope)
}

pub(super) fn oscillator_continued(nu: f64, ext: Extension, s: f64, order: usize) -> Result<SpectralSample> {
    let model = ModelSpec::oscillator(nu)?;
    if order == 0 || order > 8 {
        return Err(Error::InvalidParameter(format!("order must lie in 1..=8, got {order}")));
    }
    let (a, b) = (0.5 * (1.0 - nu), 0.5 * (1.0 + nu));
    let (offset, g) = match ext {
        Extension::Finite(theta) => (a, theta * gamma_quotient(nu)),
        Extension::Infinity => (b, 0.0),
    };
    let k = order as f64;
    let wide = phase_series(nu, g, k + 2.0);
    let next = wide.terms().map(|(e, _)| e).filter(|&e| e > k + 1e-9).fold(f64::INFINITY, f64::min);
    if s + next <= 1.0 {
        return Err(Error::InsufficientOrder(format!(
            "order {order} reaches s > {}, got s = {s}",
            1.0 - next
        )));
    }
    let series: Vec<(f64, f64)> = power_series(&wide, offset, s);
    let (kept, beyond): (Vec<(f64, f64)>, Vec<(f64, f64)>) = series.into_iter().partition(|&(e, _)| e <= k + 1e-9);

    let images = kept
        .iter()
        .map(|&(e, c)| {
            if (s + e - 1.0).abs() < 1e-14 {
                removable_image(&wide, offset, s, e, c).ok_or(Error::Pole { function: "zeta_continued", at: s })
            } else {
                riemann_zeta(s + e).map(|z| c * z)
            }
        })
        .collect::<Result<Vec<f64>>>()?;

    let eig = first_eigenvalues(&model, ext, Branch::Positive, REMAINDER_TERMS + 1)?;
    // (λ_n/4n)^{−s} − 1 against the expansion without its leading 1, so the
    // O(n^{−s}) parts cancel exactly
    let lead: f64 = kept.iter().filter(|&&(ex, _)| ex < 1e-12).map(|&(_, c)| c).sum();
    let (remainder, magnitudes): (Vec<f64>, Vec<f64>) = eig[1..]
        .iter()
        .map(|e| {
            let n = e.index as f64;
            let x = if g == 0.0 { offset / n } else { (0.25 * e.lambda - n) / n };
            let head = (-s * x.ln_1p()).exp_m1();
            let rest: f64 = kept.iter().filter(|&&(ex, _)| ex >= 1e-12).map(|&(ex, c)| c * n.powf(-ex)).sum();
            let size = n.powf(-s);
            (size * ((1.0 - lead) + head - rest), size * (head.abs() + rest.abs() + (1.0 - lead).abs()))
        })
        .unzip();
    let mut rounding = 4.0 * f64::EPSILON * (pairwise_sum(&magnitudes) + images.iter().map(|v| v.abs()).sum::<f64>());
    if g != 0.0 {
        // a root-found λ_n carries a relative rounding error of a few ulps
        rounding += eig[1..].iter().map(|e| (0.25 * e.lambda).powf(-s)).sum::<f64>() * 4.0 * f64::EPSILON * s.abs();
    }
    let m = eig.last().map_or(0.0, |e| e.index as f64);
    let tail = beyond
        .iter()
        .map(|&(e, c)| hurwitz_zeta(s + e, m + 1.0).map(|z| c * z))
        .collect::<Result<Vec<f64>>>()?
        .iter()
        .sum::<f64>();

    let scale = 4f64.powf(-s);
    let mut value = scale * (pairwise_sum(&images) + pairwise_sum(&remainder) + tail);
    let mut negative = None;
    let l0 = eig[0].lambda;
    if l0 > 0.0 {
        value += l0.powf(-s);
    } else if l0 < 0.0 {
        negative = Some(l0.abs().powf(-s));
    }
    let mut out = SpectralSample::new(s, value, scale * (tail.abs() + rounding), eig.len());
    out.negative_mode = negative;
    Ok(out)
}
