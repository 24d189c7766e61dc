//! Partial sums over computed eigenvalues completed by certified tails.

use rayon::prelude::*;

use super::pairwise_sum;
use crate::error::{Error, Result};
use crate::models::{Branch, Extension, ModelKind, ModelSpec};
use crate::specfun::{hurwitz_zeta, mcmahon};
use crate::spectrum::{first_eigenvalues, Eigenvalue};

/// Largest number of eigenvalues a certified sum may use per branch.
pub(crate) const MAX_TERMS: usize = 1 << 18;

/// Continuous family x ↦ |λ|(x) such that eigenvalue n is |λ|(n + ε)
/// asymptotically, and the lattice brackets are |λ|(n + ε_lo), |λ|(n + ε_hi).
#[derive(Debug, Clone, Copy)]
pub(crate) enum Growth {
    Linear { scale: f64 },
    Sqrt { scale: f64 },
    Bessel { order: f64, squared: bool },
}

impl Growth {
    pub(crate) fn of(model: &ModelSpec) -> Growth {
        let p = model.param();
        match model.kind() {
            ModelKind::Oscillator => Growth::Linear { scale: 4.0 },
            ModelKind::Interval => Growth::Bessel { order: p, squared: true },
            ModelKind::Dirac => Growth::Bessel { order: 0.5 - p, squared: false },
            ModelKind::AharonovBohm => Growth::Sqrt { scale: 2.0 },
            ModelKind::Susy => Growth::Sqrt { scale: std::f64::consts::SQRT_2 },
        }
    }

    fn eval(self, x: f64) -> f64 {
        match self {
            Growth::Linear { scale } => scale * x,
            Growth::Sqrt { scale } => scale * x.max(0.0).sqrt(),
            Growth::Bessel { order, squared } => {
                let j = mcmahon(order, x);
                if squared {
                    j * j
                } else {
                    j
                }
            }
        }
    }

    /// ε with eval(n + ε) = m.
    fn shift(self, n: f64, m: f64) -> f64 {
        match self {
            Growth::Linear { scale } => m / scale - n,
            Growth::Sqrt { scale } => (m / scale).powi(2) - n,
            Growth::Bessel { .. } => {
                let mut eps = 0.0;
                for _ in 0..60 {
                    let x = n + eps;
                    let f = self.eval(x) - m;
                    let d = (self.eval(x + 1e-3) - self.eval(x - 1e-3)) / 2e-3;
                    let step = f / d;
                    eps -= step;
                    if step.abs() < 1e-14 * (1.0 + n) {
                        break;
                    }
                }
                eps
            }
        }
    }
}

/// The summand of a spectral sum as a function of the signed eigenvalue.
pub(crate) enum Summand<'a> {
    /// λ^{−s} on the positive branch.
    Power(f64),
    Map(&'a (dyn Fn(f64) -> f64 + Sync)),
}

impl Summand<'_> {
    fn at(&self, lambda: f64) -> f64 {
        match self {
            Summand::Power(s) => {
                if lambda > 0.0 {
                    lambda.powf(-s)
                } else {
                    0.0
                }
            }
            Summand::Map(f) => f(lambda),
        }
    }
}

/// Σ_{n > last} f(sign · eval(n + ε)) and an error estimate.
fn tail(growth: Growth, sign: f64, last: f64, eps: f64, f: &Summand) -> Result<(f64, f64)> {
    if let Summand::Power(s) = *f {
        let q = last + 1.0 + eps;
        match growth {
            Growth::Linear { scale } => return Ok((scale.powf(-s) * hurwitz_zeta(s, q)?, 0.0)),
            Growth::Sqrt { scale } => return Ok((scale.powf(-s) * hurwitz_zeta(0.5 * s, q)?, 0.0)),
            Growth::Bessel { .. } => {}
        }
    }
    let h = |x: f64| f.at(sign * growth.eval(x + eps));
    let x0 = last + 0.5;
    let out = quadrature::double_exponential::integrate(|v| if v <= 0.0 { 0.0 } else { h(x0 / v) * x0 / (v * v) }, 0.0, 1.0, 1e-15);
    let d = 0.25;
    let d1 = (h(x0 + d) - h(x0 - d)) / (2.0 * d);
    let d3 = (h(x0 + 2.0 * d) - 2.0 * h(x0 + d) + 2.0 * h(x0 - d) - h(x0 - 2.0 * d)) / (2.0 * d * d * d);
    let corr = 7.0 * d3 / 5760.0;
    let value = out.integral + d1 / 24.0 - corr;
    Ok((value, corr.abs() + out.error_estimate.abs()))
}

/// One branch of a spectral sum, enlarged until the tail bound meets `tol`.
pub(crate) struct BranchSum {
    pub value: f64,
    pub bound: f64,
    pub terms: usize,
}

pub(crate) fn branch_sum(
    model: &ModelSpec,
    ext: Extension,
    branch: Branch,
    f: &Summand,
    tol: f64,
    start: usize,
) -> Result<BranchSum> {
    let growth = Growth::of(model);
    let exact = ext.is_distinguished(model);
    let sign = branch.sign();
    let mut count = start.max(16);
    loop {
        let eig: Vec<Eigenvalue> = first_eigenvalues(model, ext, branch, count)?;
        let terms: Vec<f64> = eig.par_iter().map(|e| f.at(e.lambda)).collect();
        let partial = pairwise_sum(&terms);
        let last = eig.last().ok_or_else(|| Error::Numerical("empty eigenvalue list".into()))?;
        let n = last.index as f64;
        let eps = growth.shift(n, last.lambda.abs());
        let (t, em) = tail(growth, sign, n, eps, f)?;
        let mut bound = em;
        if !exact {
            let (a, b) = (last.bracket.lo.abs(), last.bracket.hi.abs());
            for edge in [a.min(b), a.max(b)] {
                let (te, _) = tail(growth, sign, n, growth.shift(n, edge), f)?;
                bound = bound.max(em + (te - t).abs());
            }
        }
        if !(partial + t).is_finite() {
            return Err(Error::Numerical("spectral sum is not finite".into()));
        }
        if bound <= tol {
            return Ok(BranchSum { value: partial + t, bound, terms: eig.len() });
        }
        if count >= MAX_TERMS {
            return Err(Error::InfeasibleTolerance(format!(
                "tail bound {bound:e} exceeds tolerance {tol:e} with {count} eigenvalues"
            )));
        }
        count = (count * 4).min(MAX_TERMS);
    }
}
