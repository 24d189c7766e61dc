//! Self-check suite run by `verify`: each criterion compares a numerical
//! route of the library against a closed form.

use std::f64::consts::PI;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::asympt::{default_fit_window, fit_power_law, pole_table};
use crate::error::Result;
use crate::models::{
    closed_form_eigenvalue, graded_heat_closed_ab, krein_factor, resolvent_trace_closed, Branch, Extension, ModelSpec,
    SpectralPoint,
};
use crate::specfn::{ab_graded_heat_sum, eta, graded_partition, heat_trace_diff, resolvent_trace_sum, zeta_continued};
use crate::specfun::{
    bessel_j, bessel_y, gamma, hankel_symbol, hurwitz_zeta, kummer_m, kummer_u, lgamma,
};
use crate::spectrum::first_root_eigenvalues;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

type Check = fn(&mut StdRng) -> Result<(bool, String)>;

const CHECKS: [(u8, &str, Check); 10] = [
    (1, "closed spectra by root finding", closed_spectra),
    (2, "interval resolvent trace", interval_trace),
    (3, "Krein relation", krein_relation),
    (4, "Aharonov-Bohm graded heat trace", ab_graded),
    (5, "anomalous heat exponent", heat_exponent),
    (6, "oscillator residue at s = -nu", oscillator_residue),
    (7, "Dirac squared resolvent and eta", dirac_checks),
    (8, "supercharge spectrum and graded partition", susy_checks),
    (9, "Aharonov-Bohm zeta and poles", ab_zeta),
    (10, "special-function identities", special_functions),
];

/// Runs the criteria whose ids are in `ids` (all when empty).
pub fn run_suite(ids: &[u8], seed: u64) -> Vec<Outcome> {
    CHECKS
        .iter()
        .filter(|(id, _, _)| ids.is_empty() || ids.contains(id))
        .map(|&(id, title, check)| {
            let mut rng = StdRng::seed_from_u64(seed.wrapping_add(id as u64));
            let start = Instant::now();
            let (passed, detail) = check(&mut rng).unwrap_or_else(|e| (false, format!("error: {e}")));
            Outcome { id, title, passed, detail, seconds: start.elapsed().as_secs_f64() }
        })
        .collect()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn closed_spectra(_: &mut StdRng) -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    for nu in [0.25, 0.5, 0.75] {
        for model in [ModelSpec::oscillator(nu)?, ModelSpec::interval(nu)?] {
            for ext in [Extension::Finite(0.0), Extension::Infinity] {
                let first = if model.kind() == crate::models::ModelKind::Interval { 1 } else { 0 };
                let count = 101 - first;
                for e in first_root_eigenvalues(&model, ext, Branch::Positive, count)? {
                    let exact = closed_form_eigenvalue(&model, ext, e.index, Branch::Positive)?;
                    worst = worst.max(rel(e.lambda, exact));
                }
            }
        }
    }
    Ok((worst <= 1e-9, format!("max relative deviation {worst:.3e} (tol 1e-9)")))
}

fn interval_trace(_: &mut StdRng) -> Result<(bool, String)> {
    let model = ModelSpec::interval(0.3)?;
    let mut worst = 0.0f64;
    for mu in [1.3, 3.7, 7.2] {
        let p = SpectralPoint::Real(mu);
        let sum = resolvent_trace_sum(&model, Extension::Infinity, p, 1e-10)?.value;
        let closed = resolvent_trace_closed(&model, Extension::Infinity, p)?;
        worst = worst.max((sum - closed).abs());
    }
    Ok((worst <= 1e-8, format!("max deviation {worst:.3e} (tol 1e-8)")))
}

fn krein_relation(_: &mut StdRng) -> Result<(bool, String)> {
    let model = ModelSpec::interval(0.3)?;
    let p = SpectralPoint::Imaginary(2.0);
    let tr = |ext| resolvent_trace_sum(&model, ext, p, 1e-11).map(|s| s.value);
    let t_inf = tr(Extension::Infinity)?;
    let ratio = (tr(Extension::Finite(1.0))? - t_inf) / (tr(Extension::Finite(0.0))? - t_inf);
    let tau = krein_factor(&model, Extension::Finite(1.0), p)?.tau;
    let d = (ratio - tau).abs();
    Ok((d <= 1e-8, format!("ratio {ratio:.12} vs tau {tau:.12}, deviation {d:.3e} (tol 1e-8)")))
}

fn ab_graded(_: &mut StdRng) -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    for kappa in [0.1, 0.25, 0.4] {
        for t in [0.05, 0.5, 2.0] {
            let sum = ab_graded_heat_sum(kappa, t, 1e-13)?.value;
            worst = worst.max((sum - graded_heat_closed_ab(kappa, t)?).abs());
        }
    }
    Ok((worst <= 1e-10, format!("max deviation {worst:.3e} (tol 1e-10)")))
}

fn heat_exponent(_: &mut StdRng) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for nu in [0.25, 0.4] {
        let model = ModelSpec::interval(nu)?;
        let samples = default_fit_window()
            .into_iter()
            .map(|t| {
                let diff = heat_trace_diff(&model, Extension::Finite(1.0), Extension::Infinity, t, 1e-12)?.value;
                Ok((t, diff - nu))
            })
            .collect::<Result<Vec<_>>>()?;
        let fit = fit_power_law(&samples)?;
        let target = 1.0 / gamma(nu)?;
        let dp = (fit.exponent - nu).abs();
        let dc = rel(fit.coefficient, target);
        ok &= dp <= 0.01 && dc <= 0.05;
        parts.push(format!("nu={nu}: p={:.4} c={:.4} (target {nu}, {target:.4})", fit.exponent, fit.coefficient));
    }
    Ok((ok, parts.join("; ")))
}

fn oscillator_residue(_: &mut StdRng) -> Result<(bool, String)> {
    let nu = 0.3;
    let model = ModelSpec::oscillator(nu)?;
    let ext = Extension::Finite(1.0);
    let eps = 1e-3;
    let z = |s| zeta_continued(&model, ext, s, 6).map(|x| x.value);
    let numeric = 0.5 * eps * (z(-nu + eps)? - z(-nu - eps)?);
    let (lg, _) = lgamma(-nu)?;
    let formula = 4f64.powf(nu) * (-2.0 * lg).exp();
    let table = pole_table(&model, ext, -1.0)?.residue_at(-nu).unwrap_or(f64::NAN);
    let d_num = rel(numeric, formula);
    let d_tab = rel(table, formula);
    Ok((
        d_num <= 0.01 && d_tab <= 1e-12,
        format!("numeric {numeric:.10}, table {table:.12}, formula {formula:.12}; rel {d_num:.2e}, {d_tab:.2e}"),
    ))
}

fn dirac_checks(_: &mut StdRng) -> Result<(bool, String)> {
    let model = ModelSpec::dirac_nu(0.25)?;
    let mut worst = 0.0f64;
    for p in [SpectralPoint::Real(0.8), SpectralPoint::Imaginary(5.0)] {
        let sum = resolvent_trace_sum(&model, Extension::Infinity, p, 1e-11)?.value;
        worst = worst.max((sum - resolvent_trace_closed(&model, Extension::Infinity, p)?).abs());
    }
    let mut eta_max = 0.0f64;
    for ext in [Extension::Infinity, Extension::Finite(0.0)] {
        for s in [1.5, 2.0, 3.0] {
            eta_max = eta_max.max(eta(&model, ext, s)?.value.abs());
        }
    }
    Ok((
        worst <= 1e-8 && eta_max == 0.0,
        format!("trace deviation {worst:.3e} (tol 1e-8), max |eta| {eta_max:e}"),
    ))
}

fn susy_checks(_: &mut StdRng) -> Result<(bool, String)> {
    let alpha = 0.25;
    let model = ModelSpec::susy(alpha)?;
    let mut bounds_ok = true;
    for beta in [-3.0, 1.0, 4.0] {
        for branch in [Branch::Positive, Branch::Negative] {
            for e in first_root_eigenvalues(&model, Extension::Finite(beta), branch, 60)? {
                let n = e.index as f64;
                let l = e.lambda.abs();
                bounds_ok &= (2.0 * n).sqrt() < l && l < (2.0 * (n + 1.0)).sqrt();
            }
        }
    }
    let mut worst = 0.0f64;
    for ext in [Extension::Infinity, Extension::Finite(0.0)] {
        for branch in [Branch::Positive, Branch::Negative] {
            for e in first_root_eigenvalues(&model, ext, branch, 60)? {
                let n = e.index as f64;
                let exact = match ext {
                    Extension::Infinity => (2.0 * n).sqrt(),
                    Extension::Finite(_) => (2.0 * n + 1.0 - 2.0 * alpha).sqrt(),
                };
                worst = worst.max((e.lambda.abs() - exact).abs() / exact.max(1.0));
            }
        }
    }
    let mut graded = 0.0f64;
    for (gamma_angle, target) in [(0.0, 1.0), (PI / 2.0, 0.0)] {
        let ext = Extension::from_susy_angle(alpha, gamma_angle)?;
        for t in [0.25, 1.0] {
            graded = graded.max((graded_partition(alpha, ext, t, 1e-10)?.value - target).abs());
        }
    }
    Ok((
        bounds_ok && worst <= 1e-9 && graded <= 1e-8,
        format!("bounds {bounds_ok}, closed spectra {worst:.3e} (tol 1e-9), graded {graded:.3e} (tol 1e-8)"),
    ))
}

fn ab_zeta(_: &mut StdRng) -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    let mut single = true;
    for kappa in [0.1, 0.25, 0.4] {
        let model = ModelSpec::aharonov_bohm(kappa)?;
        let z = zeta_continued(&model, Extension::Finite(0.0), 0.0, 1)?.value;
        worst = worst.max((z - (0.5 - kappa)).abs()).max((hurwitz_zeta(0.0, kappa)? - (0.5 - kappa)).abs());
        let table = pole_table(&model, Extension::Finite(0.0), -10.0)?;
        single &= table.len() == 1 && table.residue_at(2.0) == Some(0.5);
    }
    Ok((worst <= 1e-15 && single, format!("zeta(0) deviation {worst:e}, single pole (2, 1/2): {single}")))
}

/// Draws 10⁴ cases across the identities.
fn special_functions(rng: &mut StdRng) -> Result<(bool, String)> {
    const PER: usize = 2000;
    let mut fails = [0usize; 5];
    for _ in 0..PER {
        let x: f64 = rng.gen_range(0.05..0.95);
        let refl = gamma(x)? * gamma(1.0 - x)? * (PI * x).sin() / PI;
        fails[0] += usize::from((refl - 1.0).abs() > 1e-12);

        let nu: f64 = rng.gen_range(-0.95..2.0);
        let z: f64 = rng.gen_range(0.1..40.0);
        let w = bessel_j(nu + 1.0, z)? * bessel_y(nu, z)? - bessel_j(nu, z)? * bessel_y(nu + 1.0, z)?;
        fails[1] += usize::from(rel(w, 2.0 / (PI * z)) > 1e-9);

        let nu: f64 = rng.gen_range(0.0..3.0);
        let lhs = bessel_j(nu - 1.0, z)? + bessel_j(nu + 1.0, z)?;
        let rhs = 2.0 * nu / z * bessel_j(nu, z)?;
        let scale = bessel_j(nu - 1.0, z)?.abs().max(bessel_j(nu + 1.0, z)?.abs()).max(1e-300);
        fails[2] += usize::from((lhs - rhs).abs() / scale > 1e-9);

        let a: f64 = rng.gen_range(-2.0..2.0);
        let b: f64 = rng.gen_range(1.2..3.0);
        let zk: f64 = rng.gen_range(0.05..10.0);
        // b(b−1)M(a,b−1) + b(1−b−z)M(a,b) + z(b−a)M(a,b+1) = 0
        let terms = [
            b * (b - 1.0) * kummer_m(a, b - 1.0, zk)?,
            b * (1.0 - b - zk) * kummer_m(a, b, zk)?,
            zk * (b - a) * kummer_m(a, b + 1.0, zk)?,
        ];
        let scale = terms.iter().fold(1e-12f64, |m, t| m.max(t.abs()));
        let u1 = kummer_u(a, b, zk)?;
        let u2 = zk.powf(1.0 - b) * kummer_u(a - b + 1.0, 2.0 - b, zk)?;
        let kum = terms.iter().sum::<f64>().abs() / scale + rel(u1, u2);
        fails[3] += usize::from(!(kum <= 1e-8));

        let nu: f64 = rng.gen_range(-3.0..3.0);
        let k = rng.gen_range(0..12usize);
        fails[4] += usize::from(hankel_symbol(nu, k) != hankel_symbol(-nu, k));
    }
    let total: usize = fails.iter().sum();
    Ok((
        total == 0,
        format!(
            "{} cases; failures: reflection {}, wronskian {}, recurrence {}, kummer {}, hankel parity {}",
            5 * PER,
            fails[0],
            fails[1],
            fails[2],
            fails[3],
            fails[4]
        ),
    ))
}
