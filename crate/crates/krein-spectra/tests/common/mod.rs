//! Test-side reference implementations, written independently of the
//! library so that comparisons against them are genuine cross-checks.
#![allow(dead_code)]

use std::f64::consts::PI;

const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(x) by the Lanczos approximation (g = 7), reflected below 1/2.
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let t = x + 7.5;
    let a = LANCZOS[1..].iter().enumerate().fold(LANCZOS[0], |acc, (i, c)| acc + c / (x + i as f64 + 1.0));
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

/// ψ(x) by upward recurrence and the asymptotic series.
pub fn digamma(mut x: f64) -> f64 {
    let mut acc = 0.0;
    while x < 12.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let x2 = 1.0 / (x * x);
    acc + x.ln() - 0.5 / x
        - x2 * (1.0 / 12.0 - x2 * (1.0 / 120.0 - x2 * (1.0 / 252.0 - x2 * (1.0 / 240.0 - x2 / 132.0))))
}

/// J_ν(x) by its power series; adequate for x ≲ 12.
pub fn bessel_j_series(nu: f64, x: f64) -> f64 {
    let h = 0.5 * x;
    let mut term = h.powf(nu) / gamma(nu + 1.0);
    let mut sum = term;
    for k in 1..200 {
        let k = k as f64;
        term *= -h * h / (k * (k + nu));
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// I_ν(x) by its power series.
pub fn bessel_i_series(nu: f64, x: f64) -> f64 {
    let h = 0.5 * x;
    let mut term = h.powf(nu) / gamma(nu + 1.0);
    let mut sum = term;
    for k in 1..400 {
        let k = k as f64;
        term *= h * h / (k * (k + nu));
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// Gauss–Legendre nodes and weights on [−1, 1].
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (1..=n)
        .map(|i| {
            let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let k = k as f64;
                    let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// ∫_a^b f by composite Gauss–Legendre with `panels` panels.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize, rule: &[(f64, f64)]) -> f64 {
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|p| {
            let mid = a + (p as f64 + 0.5) * h;
            rule.iter().map(|&(x, w)| w * f(mid + 0.5 * h * x)).sum::<f64>() * 0.5 * h
        })
        .sum()
}

/// J_ν(x) for x > 0 from Schläfli's integral
/// (1/π)∫₀^π cos(νt − x sin t)dt − (sin νπ/π)∫₀^∞ e^{−x sinh t − νt}dt.
pub fn bessel_j_integral(nu: f64, x: f64, rule: &[(f64, f64)]) -> f64 {
    let panels = (x / 2.0).ceil().max(8.0) as usize;
    let first = integrate(|t| (nu * t - x * t.sin()).cos(), 0.0, PI, panels, rule) / PI;
    let s = (PI * nu).sin();
    if s == 0.0 {
        return first;
    }
    let upper = (60.0 / x).asinh() + 1.0;
    let second = integrate(|t| (-x * t.sinh() - nu * t).exp(), 0.0, upper, 64, rule);
    first - s / PI * second
}

/// McMahon's estimate of j_{ν,n}.
pub fn mcmahon(nu: f64, n: usize) -> f64 {
    let mu = 4.0 * nu * nu;
    let b = (n as f64 + 0.5 * nu - 0.25) * PI;
    let e = 8.0 * b;
    b - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e.powi(3))
}

/// j_{ν,n} by the secant method on the integral representation.
pub fn bessel_zero(nu: f64, n: usize, rule: &[(f64, f64)]) -> f64 {
    let f = |x: f64| bessel_j_integral(nu, x, rule);
    let mut x0 = mcmahon(nu, n);
    let mut x1 = x0 + 1e-3;
    let (mut f0, mut f1) = (f(x0), f(x1));
    for _ in 0..60 {
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x1);
        if (x1 - x0).abs() < 1e-15 * x1 {
            break;
        }
    }
    x1
}

/// ζ_H(s, q) by direct summation plus an Euler–Maclaurin tail.
pub fn hurwitz(s: f64, q: f64) -> f64 {
    let n = 40usize;
    let head: f64 = (0..n).map(|k| (q + k as f64).powf(-s)).sum();
    let a = q + n as f64;
    // B_{2k}/(2k)! coefficients for k = 1..5
    let b = [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0, 1.0 / 47900160.0];
    let mut tail = a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s);
    let mut rising = s;
    let mut power = a.powf(-s - 1.0);
    for (k, c) in b.iter().enumerate() {
        tail += c * rising * power;
        let k = k as f64;
        rising *= (s + 2.0 * k + 1.0) * (s + 2.0 * k + 2.0);
        power /= a * a;
    }
    head + tail
}

/// Least-squares fit of ln|y| = ln|c| + p ln t, returning (p, c).
pub fn power_fit(samples: &[(f64, f64)]) -> (f64, f64) {
    let n = samples.len() as f64;
    let xs: Vec<f64> = samples.iter().map(|s| s.0.ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.1.abs().ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let p = sxy / sxx;
    let c = (my - p * mx).exp() * samples[0].1.signum();
    (p, c)
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}
