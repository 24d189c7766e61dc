//! Acceptance criteria, one line each. Library results are compared with
//! the reference implementations in `common`.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use krein_spectra::asympt::pole_table;
use krein_spectra::models::{krein_factor, Branch, Extension, ModelSpec, SpectralPoint};
use krein_spectra::specfn::{
    ab_graded_heat_sum, eta, graded_partition, heat_trace_diff, resolvent_trace_sum, zeta_continued,
};
use krein_spectra::specfun::{
    bessel_i, bessel_j, bessel_j_zero, bessel_y, gamma, hankel_symbol, hurwitz_zeta, kummer_m, kummer_u,
};
use krein_spectra::spectrum::{first_eigenvalues, first_root_eigenvalues};

use common::{bessel_i_series, bessel_j_series, bessel_zero, gauss_legendre, hurwitz, power_fit, rel};

struct Line {
    passed: bool,
    detail: String,
}

fn line(passed: bool, detail: String) -> Line {
    Line { passed, detail }
}

fn within(elapsed: Duration, limit: f64) -> bool {
    elapsed.as_secs_f64() < limit
}

fn c1_closed_spectra() -> Line {
    let rule = gauss_legendre(16);
    let mut worst = 0.0f64;
    let start = Instant::now();
    let mut library = Vec::new();
    for nu in [0.25, 0.5, 0.75] {
        for ext in [Extension::Finite(0.0), Extension::Infinity] {
            let osc = ModelSpec::oscillator(nu).unwrap();
            let int = ModelSpec::interval(nu).unwrap();
            library.push((nu, ext, 0, first_root_eigenvalues(&osc, ext, Branch::Positive, 101).unwrap()));
            library.push((nu, ext, 1, first_root_eigenvalues(&int, ext, Branch::Positive, 100).unwrap()));
        }
    }
    let elapsed = start.elapsed();
    for (nu, ext, kind, eig) in &library {
        let order = if *ext == Extension::Infinity { *nu } else { -nu };
        for e in eig {
            let n = e.index as f64;
            let exact = if *kind == 0 {
                4.0 * (n + 0.5 + 0.5 * order)
            } else {
                bessel_zero(order, e.index, &rule).powi(2)
            };
            worst = worst.max(rel(e.lambda, exact));
        }
    }
    line(
        worst <= 1e-9 && within(elapsed, 2.0),
        format!("max rel {worst:.2e} (tol 1e-9), root finding {:.2} s (limit 2 s)", elapsed.as_secs_f64()),
    )
}

/// Σ_{n>m} 1/(j²_{ν,n} − μ²) from McMahon zeros, summed far out and
/// closed with the integral of the leading term.
fn mcmahon_tail(nu: f64, mu: f64, m: usize) -> f64 {
    let far = 400_000;
    let head: f64 = (m + 1..=far).rev().map(|n| 1.0 / (common::mcmahon(nu, n).powi(2) - mu * mu)).sum();
    head + 1.0 / (PI * PI * (far as f64 + 0.5 * nu + 0.25))
}

fn c2_interval_trace() -> Line {
    let nu = 0.3;
    let model = ModelSpec::interval(nu).unwrap();
    let start = Instant::now();
    let eig = first_eigenvalues(&model, Extension::Infinity, Branch::Positive, 500).unwrap();
    let mut worst_sum = 0.0f64;
    let mut worst_lib = 0.0f64;
    for mu in [1.3, 3.7, 7.2] {
        let closed = bessel_j_series(nu + 1.0, mu) / (2.0 * mu * bessel_j_series(nu, mu));
        let head: f64 = eig.iter().rev().map(|e| 1.0 / (e.lambda - mu * mu)).sum();
        worst_sum = worst_sum.max((head + mcmahon_tail(nu, mu, 500) - closed).abs());
        let lib = resolvent_trace_sum(&model, Extension::Infinity, SpectralPoint::Real(mu), 1e-10).unwrap();
        worst_lib = worst_lib.max((lib.value - closed).abs());
    }
    let elapsed = start.elapsed();
    line(
        worst_sum <= 1e-8 && worst_lib <= 1e-8 && within(elapsed, 5.0),
        format!(
            "500 zeros + tail {worst_sum:.2e}, library sum {worst_lib:.2e} (tol 1e-8), {:.2} s (limit 5 s)",
            elapsed.as_secs_f64()
        ),
    )
}

fn c3_krein() -> Line {
    let nu: f64 = 0.3;
    let theta = 1.0;
    let mu = 2.0;
    let model = ModelSpec::interval(nu).unwrap();
    let p = SpectralPoint::Imaginary(mu);
    let tr = |ext| resolvent_trace_sum(&model, ext, p, 1e-11).unwrap().value;
    let t_inf = tr(Extension::Infinity);
    let ratio = (tr(Extension::Finite(theta)) - t_inf) / (tr(Extension::Finite(0.0)) - t_inf);
    let c = 4f64.powf(nu) * common::gamma(nu) / common::gamma(-nu);
    let k = -c * mu.powf(-2.0 * nu) * bessel_i_series(nu, mu) / bessel_i_series(-nu, mu);
    let tau = 1.0 / (1.0 + theta * k);
    let lib_tau = krein_factor(&model, Extension::Finite(theta), p).unwrap().tau;
    let d = (ratio - tau).abs();
    line(
        d <= 1e-8 && (lib_tau - tau).abs() <= 1e-12,
        format!("ratio {ratio:.12}, tau {tau:.12}, |diff| {d:.2e} (tol 1e-8)"),
    )
}

fn c4_ab_graded() -> Line {
    let mut worst = 0.0f64;
    for kappa in [0.1f64, 0.25, 0.4] {
        for t in [0.05f64, 0.5, 2.0] {
            let closed = -(-2.0 * kappa * t).exp() * (2.0 * kappa * t).sinh() / (2.0 * t).sinh().powi(2);
            let sum = ab_graded_heat_sum(kappa, t, 1e-13).unwrap().value;
            worst = worst.max((sum - closed).abs());
        }
    }
    line(worst <= 1e-10, format!("max |direct − closed| {worst:.2e} (tol 1e-10)"))
}

/// Fitted (p, c) of heat_trace_diff − ν on the default window.
fn heat_fit(nu: f64) -> (f64, f64) {
    let model = ModelSpec::interval(nu).unwrap();
    let samples: Vec<(f64, f64)> = (0..12)
        .map(|i| {
            let t = 10f64.powf(-3.0 + i as f64 / 11.0);
            let d = heat_trace_diff(&model, Extension::Finite(1.0), Extension::Infinity, t, 1e-12).unwrap();
            (t, d.value - nu)
        })
        .collect();
    power_fit(&samples)
}

fn c5_heat_exponent() -> Line {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for nu in [0.25, 0.4] {
        let (p, c) = heat_fit(nu);
        let target = 1.0 / common::gamma(nu);
        ok &= (p - nu).abs() <= 0.01 && rel(c, target) <= 0.05;
        parts.push(format!("nu={nu}: p̂={p:.4} (want {nu}±0.01), ĉ={c:.4} (want {target:.4}±5%)"));
    }
    ok &= within(start.elapsed(), 60.0);
    line(ok, parts.join("; "))
}

fn c6_residue() -> Line {
    let nu: f64 = 0.3;
    let model = ModelSpec::oscillator(nu).unwrap();
    let ext = Extension::Finite(1.0);
    let formula = 4f64.powf(nu) / common::gamma(-nu).powi(2);
    let eps = 1e-3;
    let z = |s| zeta_continued(&model, ext, s, 6).unwrap().value;
    let numeric = 0.5 * eps * (z(-nu + eps) - z(-nu - eps));
    let table = pole_table(&model, ext, -1.0).unwrap().residue_at(-nu).unwrap();
    let (dn, dt) = (rel(numeric, formula), rel(table, formula));
    line(
        dn <= 0.01 && dt <= 1e-12,
        format!("numeric {numeric:.9} rel {dn:.1e} (tol 1%), table rel {dt:.1e} (tol 1e-12), formula {formula:.12}"),
    )
}

fn c7_dirac() -> Line {
    let nu = 0.25;
    let m = -nu;
    let model = ModelSpec::dirac_nu(nu).unwrap();
    let ext = Extension::Infinity;
    // Σ 1/(λ − z)² = d/dz[J_{1−ν}/J_{−ν}] = 1 − (1−2ν) r/z + r²
    let x = 0.8;
    let r = bessel_j_series(m + 1.0, x) / bessel_j_series(m, x);
    let real = 1.0 - (2.0 * m + 1.0) * r / x + r * r;
    let y = 5.0;
    let rho = bessel_i_series(m + 1.0, y) / bessel_i_series(m, y);
    let imag = 1.0 - (2.0 * m + 1.0) * rho / y - rho * rho;
    let lib = |p| resolvent_trace_sum(&model, ext, p, 1e-11).unwrap().value;
    let d_real = (lib(SpectralPoint::Real(x)) - real).abs();
    let d_imag = (lib(SpectralPoint::Imaginary(y)) - imag).abs();
    let mut eta_max = 0.0f64;
    for e in [Extension::Infinity, Extension::Finite(0.0)] {
        for s in [1.5, 2.0, 3.5] {
            eta_max = eta_max.max(eta(&model, e, s).unwrap().value.abs());
        }
    }
    line(
        d_real <= 1e-8 && d_imag <= 1e-8 && eta_max == 0.0,
        format!("λ=0.8: {d_real:.2e}, λ=5i: {d_imag:.2e} (tol 1e-8); max |η^∞|, |η^0| = {eta_max}"),
    )
}

fn c8_susy() -> Line {
    let alpha = 0.25;
    let model = ModelSpec::susy(alpha).unwrap();
    let mut bounds = true;
    for beta in [-3.0, 1.0, 4.0] {
        for branch in [Branch::Positive, Branch::Negative] {
            for e in first_root_eigenvalues(&model, Extension::Finite(beta), branch, 80).unwrap() {
                let n = e.index as f64;
                bounds &= (2.0 * n).sqrt() < e.lambda.abs() && e.lambda.abs() < (2.0 * n + 2.0).sqrt();
            }
        }
    }
    let mut worst = 0.0f64;
    for ext in [Extension::Infinity, Extension::Finite(0.0)] {
        for branch in [Branch::Positive, Branch::Negative] {
            for e in first_root_eigenvalues(&model, ext, branch, 80).unwrap() {
                let n = e.index as f64;
                let exact = match ext {
                    Extension::Infinity => branch.sign() * (2.0 * n).sqrt(),
                    Extension::Finite(_) => branch.sign() * (2.0 * n + 1.0 - 2.0 * alpha).sqrt(),
                };
                worst = worst.max((e.lambda - exact).abs() / exact.abs().max(1.0));
            }
        }
    }
    let mut graded = 0.0f64;
    for (g, target) in [(0.0, 1.0), (PI / 2.0, 0.0)] {
        let ext = Extension::from_susy_angle(alpha, g).unwrap();
        for t in [0.25, 1.0] {
            graded = graded.max((graded_partition(alpha, ext, t, 1e-10).unwrap().value - target).abs());
        }
    }
    line(
        bounds && worst <= 1e-9 && graded <= 1e-8,
        format!("bounds hold: {bounds}; closed spectra {worst:.2e} (tol 1e-9); graded {graded:.2e} (tol 1e-8)"),
    )
}

fn c9_ab_zeta() -> Line {
    let mut worst = 0.0f64;
    let mut single = true;
    for kappa in [0.1, 0.25, 0.4] {
        let model = ModelSpec::aharonov_bohm(kappa).unwrap();
        let z = zeta_continued(&model, Extension::Finite(0.0), 0.0, 1).unwrap().value;
        worst = worst.max((z - (0.5 - kappa)).abs());
        let table = pole_table(&model, Extension::Finite(0.0), -20.0).unwrap();
        single &= table.len() == 1 && table.entries[0].s == 2.0 && table.entries[0].residue == 0.5;
    }
    line(
        worst <= f64::EPSILON && single,
        format!("|ζ₊⁰(0) − (1/2 − κ)| ≤ {worst:e}; pole table is exactly {{(2, 1/2)}}: {single}"),
    )
}

fn runner(seed: u64, cases: u32) -> TestRunner {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        TestRng::from_seed(RngAlgorithm::ChaCha, &bytes),
    )
}

fn c10_properties() -> Line {
    const CASES: u32 = 2000;
    let start = Instant::now();
    let rule = gauss_legendre(16);
    let mut results: Vec<(&str, Result<(), String>)> = Vec::new();
    let mut record = |name, r: Result<(), String>| results.push((name, r));

    record(
        "reflection",
        runner(1, CASES).run(&(0.001f64..0.999), |x| {
            let v = gamma(x).unwrap() * gamma(1.0 - x).unwrap() * (PI * x).sin() / PI;
            prop_assert!((v - 1.0).abs() <= 1e-12, "x={x}: {v}");
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    record(
        "wronskian",
        runner(2, CASES).run(&(0.0f64..1.0, 0.1f64..100.0), |(nu, x)| {
            let w = bessel_j(nu + 1.0, x).unwrap() * bessel_y(nu, x).unwrap()
                - bessel_j(nu, x).unwrap() * bessel_y(nu + 1.0, x).unwrap();
            prop_assert!((w - 2.0 / (PI * x)).abs() <= 1e-10 * (2.0 / (PI * x)), "nu={nu} x={x}: {w}");
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    record(
        "recurrence",
        runner(3, CASES).run(&(0.0f64..1.0, 0.1f64..100.0), |(nu, x)| {
            let (a, b, c) = (bessel_j(nu - 1.0, x).unwrap(), bessel_j(nu + 1.0, x).unwrap(), bessel_j(nu, x).unwrap());
            let scale = a.abs().max(b.abs()).max(c.abs());
            prop_assert!((a + b - 2.0 * nu / x * c).abs() <= 1e-10 * scale, "nu={nu} x={x}");
            // J against the independent integral representation
            let ji = common::bessel_j_integral(nu, x, &rule);
            prop_assert!((c - ji).abs() <= 1e-10 * scale.max(1e-3), "nu={nu} x={x}: {c} vs {ji}");
            let iv = bessel_i(nu, x.min(30.0)).unwrap();
            let is = bessel_i_series(nu, x.min(30.0));
            prop_assert!(rel(iv, is) <= 1e-10, "I nu={nu} x={x}");
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    record(
        "kummer",
        runner(4, CASES).run(&(-3.0f64..3.0, 1.1f64..4.0, 0.05f64..15.0), |(a, b, z)| {
            let t = [
                b * (b - 1.0) * kummer_m(a, b - 1.0, z).unwrap(),
                b * (1.0 - b - z) * kummer_m(a, b, z).unwrap(),
                z * (b - a) * kummer_m(a, b + 1.0, z).unwrap(),
            ];
            let scale = t.iter().fold(1e-12f64, |m, v| m.max(v.abs()));
            prop_assert!(t.iter().sum::<f64>().abs() <= 1e-9 * scale, "M contiguity a={a} b={b} z={z}");
            let u1 = kummer_u(a, b, z).unwrap();
            let u2 = z.powf(1.0 - b) * kummer_u(a - b + 1.0, 2.0 - b, z).unwrap();
            prop_assert!(rel(u1, u2) <= 1e-9, "U transformation a={a} b={b} z={z}: {u1} vs {u2}");
            // polynomial reduction: U(−m, b, z) is a polynomial of degree m
            let m = (a.abs().floor() as usize).min(2);
            let poly = match m {
                0 => 1.0,
                1 => z - b,
                _ => z * z - 2.0 * (b + 1.0) * z + b * (b + 1.0),
            };
            let u = kummer_u(-(m as f64), b, z).unwrap();
            prop_assert!((u - poly).abs() <= 1e-9 * poly.abs().max(1.0), "U(-{m},{b},{z}) = {u} vs {poly}");
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    record(
        "hankel parity and zeta recurrence",
        runner(5, CASES).run(&(0.0f64..3.0, 0usize..20, 1.1f64..8.0, 0.05f64..3.0), |(nu, k, s, q)| {
            prop_assert_eq!(hankel_symbol(nu, k), hankel_symbol(-nu, k));
            let d = hurwitz_zeta(s, q).unwrap() - hurwitz_zeta(s, q + 1.0).unwrap();
            prop_assert!(rel(d, q.powf(-s)) <= 1e-10, "s={s} q={q}");
            prop_assert!(rel(hurwitz_zeta(s, q).unwrap(), hurwitz(s, q)) <= 1e-10, "oracle s={s} q={q}");
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    let mut interlace = true;
    for nu in [0.1, 0.37, 0.5, 0.83] {
        for n in 1..=50 {
            let (a, b, c) =
                (bessel_j_zero(nu, n).unwrap(), bessel_j_zero(nu + 1.0, n).unwrap(), bessel_j_zero(nu, n + 1).unwrap());
            interlace &= a < b && b < c;
        }
    }
    let elapsed = start.elapsed();
    let failures: Vec<String> =
        results.iter().filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{n}: {e}"))).collect();
    let ok = failures.is_empty() && interlace && within(elapsed, 30.0);
    let detail = if failures.is_empty() {
        format!("{} cases, zero interlacing {interlace}, {:.2} s (limit 30 s)", 5 * CASES, elapsed.as_secs_f64())
    } else {
        failures.join("; ")
    };
    line(ok, detail)
}

/// Criteria that cannot be met as stated, with the reason.
const UNATTAINABLE: &[(u8, &str)] = &[(
    5,
    "the t^ν term of the heat difference is 4^ν θ/Γ(−ν) t^ν, negative for θ > 0, and a t^{2ν} term of \
     comparable size on [1e-3, 1e-2] biases the exponent low",
)];

fn main() -> ExitCode {
    let criteria: [(u8, &str, fn() -> Line); 10] = [
        (1, "closed spectra by root finding", c1_closed_spectra),
        (2, "Mittag-Leffler trace identity", c2_interval_trace),
        (3, "Krein relation", c3_krein),
        (4, "AB graded heat identity", c4_ab_graded),
        (5, "anomalous heat exponent", c5_heat_exponent),
        (6, "oscillator residue at s = -nu", c6_residue),
        (7, "Dirac squared resolvent and eta", c7_dirac),
        (8, "supercharge spectra and graded partition", c8_susy),
        (9, "AB zeta at 0 and pole table", c9_ab_zeta),
        (10, "special-function property suite", c10_properties),
    ];
    let mut unexpected = 0;
    for (id, title, check) in criteria {
        let result = check();
        let known = UNATTAINABLE.iter().find(|(k, _)| *k == id);
        let status = match (result.passed, known) {
            (true, _) => "PASS",
            (false, Some(_)) => "FAIL (expected)",
            (false, None) => {
                unexpected += 1;
                "FAIL"
            }
        };
        println!("criterion {id:>2} {status}: {title}: {}", result.detail);
        if let (false, Some((_, why))) = (result.passed, known) {
            println!("             reason: {why}");
        }
    }
    // the expected failure must stay the analysed one
    for nu in [0.25, 0.4] {
        let (p, c) = heat_fit(nu);
        let leading = 4f64.powf(nu) / common::gamma(-nu);
        if !(p < nu - 0.02 && c < 0.0 && rel(c, leading) < 0.5) {
            println!("criterion  5 deviates from its analysis at nu={nu}: p̂={p}, ĉ={c}, leading {leading}");
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
