//! Eigenvalue enumeration by bracketed root finding on the interlacing
//! lattice of each model.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::models::{
    closed_form_eigenvalue, first_index, negative_mode_condition, normalized_residual, Branch, Extension, ModelKind,
    ModelSpec, NegativeMode, SpectralBracket,
};
use crate::roots::bracketed_root;
use crate::specfun::bessel_j_zeros;

/// Largest index the enumeration accepts.
pub const MAX_INDEX: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eigenvalue {
    pub index: usize,
    pub branch: Branch,
    pub lambda: f64,
    pub bracket: SpectralBracket,
    /// Normalized residual at the root.
    pub residual: f64,
}

/// Eigenvalues of one (model, extension) pair sorted by λ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenvalueStream {
    pub model: ModelSpec,
    pub ext: Extension,
    pub items: Vec<Eigenvalue>,
}

impl EigenvalueStream {
    pub fn lambdas(&self) -> impl Iterator<Item = f64> + '_ {
        self.items.iter().map(|e| e.lambda)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// Bessel zeros j_{order,k}, k = 1..=count, bracketing the spectrum.
struct Lattice {
    model: ModelSpec,
    ext: Extension,
    zeros: Vec<f64>,
}

/// Order of the Bessel function whose zeros interlace the spectrum.
fn lattice_order(model: &ModelSpec, ext: Extension) -> Option<f64> {
    let p = model.param();
    match model.kind() {
        ModelKind::Interval if p == 0.0 => match ext {
            Extension::Infinity => None,
            Extension::Finite(_) => Some(0.0),
        },
        ModelKind::Interval => match ext {
            Extension::Infinity => Some(-p),
            Extension::Finite(_) => Some(p),
        },
        ModelKind::Dirac => {
            let nu = 0.5 - p;
            match ext {
                Extension::Infinity => Some(nu),
                Extension::Finite(_) => Some(-nu),
            }
        }
        _ => None,
    }
}

impl Lattice {
    fn new(model: &ModelSpec, ext: Extension, count: usize) -> Result<Self> {
        let zeros = match lattice_order(model, ext) {
            Some(order) => bessel_j_zeros(order, count)?,
            None => Vec::new(),
        };
        Ok(Lattice { model: *model, ext, zeros })
    }

    /// j_k with j_0 = 0.
    fn zero(&self, k: usize) -> Result<f64> {
        if k == 0 {
            return Ok(0.0);
        }
        self.zeros
            .get(k - 1)
            .copied()
            .ok_or_else(|| Error::Numerical(format!("lattice holds {} zeros, zero {k} requested", self.zeros.len())))
    }

    /// Bracket of eigenvalue `n` on `branch` in the spectral variable, or
    /// the exact value when it is pinned (zero modes, threshold cases).
    fn bracket(&self, n: usize, branch: Branch) -> Result<Locus> {
        let model = &self.model;
        let p = model.param();
        let idx = n as i64;
        let bracket = |lo: f64, hi: f64| Ok(Locus::Bracket(SpectralBracket { lo, hi, index: idx }));
        match model.kind() {
            ModelKind::Oscillator => {
                let (a, b) = (0.5 * (1.0 - p), 0.5 * (1.0 + p));
                let nf = n as f64;
                match self.ext {
                    Extension::Infinity => bracket(4.0 * (a + nf), 4.0 * (a + nf + 1.0)),
                    Extension::Finite(_) if n == 0 => match negative_mode_condition(model, self.ext)? {
                        NegativeMode::Exists(br) => Ok(Locus::Bracket(br)),
                        NegativeMode::None => bracket(0.0, 4.0 * b),
                    },
                    Extension::Finite(_) => bracket(4.0 * (b + nf - 1.0), 4.0 * (b + nf)),
                }
            }
            ModelKind::Interval => {
                if p == 0.0 && self.ext == Extension::Infinity {
                    let nf = n as f64;
                    return bracket(((nf - 0.5) * PI).powi(2), (nf * PI).powi(2));
                }
                if self.ext == Extension::Infinity {
                    return bracket(self.zero(n)?.powi(2), self.zero(n + 1)?.powi(2));
                }
                if n == 1 {
                    let theta = match self.ext {
                        Extension::Finite(t) => t,
                        Extension::Infinity => unreachable!(),
                    };
                    let critical = if p == 0.0 { 0.0 } else { -1.0 };
                    if theta == critical {
                        return Ok(Locus::Exact(0.0));
                    }
                    if let NegativeMode::Exists(br) = negative_mode_condition(model, self.ext)? {
                        return Ok(Locus::Bracket(br));
                    }
                }
                bracket(self.zero(n - 1)?.powi(2), self.zero(n)?.powi(2))
            }
            ModelKind::Dirac => {
                let ext = match branch {
                    Branch::Positive => self.ext,
                    Branch::Negative => self.ext.mirrored(),
                };
                let (lo, hi) = match ext {
                    Extension::Infinity => (self.zero(n - 1)?, self.zero(n)?),
                    Extension::Finite(beta) if beta == 0.0 && n == 0 => return Ok(Locus::Exact(0.0)),
                    Extension::Finite(beta) if beta > 0.0 => (self.zero(n - 1)?, self.zero(n)?),
                    Extension::Finite(_) => (self.zero(n)?, self.zero(n + 1)?),
                };
                Ok(Locus::Bracket(signed_bracket(lo, hi, branch, idx)))
            }
            ModelKind::AharonovBohm | ModelKind::Susy => {
                let scale = if model.kind() == ModelKind::AharonovBohm { 4.0 } else { 2.0 };
                let nf = n as f64;
                let (ylo, yhi) = match self.ext {
                    Extension::Infinity if n == 0 => return Ok(Locus::Exact(0.0)),
                    Extension::Infinity => (nf - 0.5, nf + 0.5),
                    Extension::Finite(_) => (nf, nf + 1.0),
                };
                let (lo, hi) = ((scale * ylo).sqrt(), (scale * yhi).sqrt());
                Ok(Locus::Bracket(signed_bracket(lo, hi, branch, idx)))
            }
        }
    }
}

fn signed_bracket(lo: f64, hi: f64, branch: Branch, index: i64) -> SpectralBracket {
    match branch {
        Branch::Positive => SpectralBracket { lo, hi, index },
        Branch::Negative => SpectralBracket { lo: -hi, hi: -lo, index },
    }
}

enum Locus {
    Exact(f64),
    Bracket(SpectralBracket),
}

/// Number of lattice zeros needed to bracket index `n`.
fn lattice_count(n: usize) -> usize {
    n + 2
}

fn check(model: &ModelSpec, ext: Extension, n: usize, branch: Branch) -> Result<()> {
    if n > MAX_INDEX {
        return Err(Error::InvalidParameter(format!("index {n} exceeds the enumeration range {MAX_INDEX}")));
    }
    let first = first_index(model, ext, branch)?;
    if n < first {
        return Err(Error::InvalidParameter(format!("index {n} below first index {first} on the {branch:?} branch")));
    }
    Ok(())
}

fn solve(lattice: &Lattice, n: usize, branch: Branch) -> Result<Eigenvalue> {
    let model = lattice.model;
    let ext = lattice.ext;
    match lattice.bracket(n, branch)? {
        Locus::Exact(x) => Ok(Eigenvalue {
            index: n,
            branch,
            lambda: x,
            bracket: SpectralBracket { lo: x, hi: x, index: n as i64 },
            residual: normalized_residual(&model, ext, x)?,
        }),
        Locus::Bracket(br) => {
            let f = |x: f64| normalized_residual(&model, ext, x).unwrap_or(f64::NAN);
            let root = bracketed_root(f, br.lo, br.hi).map_err(|e| match e {
                Error::BracketFailure(msg) => Error::BracketFailure(format!(
                    "{model}, extension {ext}, index {n} ({branch:?}): {msg}; residual at ends {:e}, {:e}",
                    f(br.lo),
                    f(br.hi)
                )),
                other => other,
            })?;
            Ok(Eigenvalue { index: n, branch, lambda: root.x, bracket: br, residual: root.fx })
        }
    }
}

/// Eigenvalue `n` found as a root of the spectral residual, also for the
/// distinguished extensions.
pub fn root_eigenvalue(model: &ModelSpec, ext: Extension, n: usize, branch: Branch) -> Result<Eigenvalue> {
    check(model, ext, n, branch)?;
    let lattice = Lattice::new(model, ext, lattice_count(n))?;
    solve(&lattice, n, branch)
}

/// Eigenvalue `n` on `branch`; distinguished extensions use closed forms.
pub fn nth_eigenvalue(model: &ModelSpec, ext: Extension, n: usize, branch: Branch) -> Result<Eigenvalue> {
    check(model, ext, n, branch)?;
    let lattice = Lattice::new(model, ext, lattice_count(n))?;
    nth_with(&lattice, n, branch)
}

fn nth_with(lattice: &Lattice, n: usize, branch: Branch) -> Result<Eigenvalue> {
    let (model, ext) = (&lattice.model, lattice.ext);
    if !ext.is_distinguished(model) {
        return solve(lattice, n, branch);
    }
    let lambda = closed_form_eigenvalue(model, ext, n, branch)?;
    let bracket = match lattice.bracket(n, branch)? {
        Locus::Bracket(br) => br,
        Locus::Exact(x) => SpectralBracket { lo: x, hi: x, index: n as i64 },
    };
    Ok(Eigenvalue { index: n, branch, lambda, bracket, residual: normalized_residual(model, ext, lambda)? })
}

/// Eigenvalues with indices first..first+count on one branch, computed in
/// parallel. `closed` selects closed forms for distinguished extensions.
fn run(model: &ModelSpec, ext: Extension, branch: Branch, count: usize, closed: bool) -> Result<Vec<Eigenvalue>> {
    let first = first_index(model, ext, branch)?;
    if first + count > MAX_INDEX {
        return Err(Error::InvalidParameter(format!("{count} eigenvalues exceed the enumeration range")));
    }
    let lattice = Lattice::new(model, ext, lattice_count(first + count))?;
    (first..first + count)
        .into_par_iter()
        .map(|n| if closed { nth_with(&lattice, n, branch) } else { solve(&lattice, n, branch) })
        .collect()
}

/// The first `count` eigenvalues on `branch`.
pub fn first_eigenvalues(model: &ModelSpec, ext: Extension, branch: Branch, count: usize) -> Result<Vec<Eigenvalue>> {
    run(model, ext, branch, count, true)
}

/// As `first_eigenvalues` but always by root finding.
pub fn first_root_eigenvalues(
    model: &ModelSpec,
    ext: Extension,
    branch: Branch,
    count: usize,
) -> Result<Vec<Eigenvalue>> {
    run(model, ext, branch, count, false)
}

/// Lower bound for |λ| of eigenvalue `n`, used to size enumerations.
fn index_bound(model: &ModelSpec, cutoff: f64) -> usize {
    let c = cutoff.abs();
    let n = match model.kind() {
        ModelKind::Oscillator => c / 4.0 + 2.0,
        ModelKind::Interval => c.sqrt() / PI + 2.0,
        ModelKind::Dirac => c / PI + 2.0,
        ModelKind::AharonovBohm => c * c / 4.0 + 2.0,
        ModelKind::Susy => c * c / 2.0 + 2.0,
    };
    n.ceil() as usize
}

fn branches(model: &ModelSpec) -> &'static [Branch] {
    if model.is_signed() {
        &[Branch::Negative, Branch::Positive]
    } else {
        &[Branch::Positive]
    }
}

/// Every eigenvalue with λ ≤ cutoff (|λ| ≤ cutoff for the signed models),
/// sorted by λ. Completeness follows from the lattice: one eigenvalue per
/// bracket, and enumeration runs until a bracket starts above the cutoff.
pub fn eigenvalues_up_to(model: &ModelSpec, ext: Extension, cutoff: f64) -> Result<EigenvalueStream> {
    if !(cutoff > 0.0) || !cutoff.is_finite() {
        return Err(Error::InvalidParameter(format!("cutoff must be positive and finite, got {cutoff}")));
    }
    let mut items = Vec::new();
    for &branch in branches(model) {
        let first = first_index(model, ext, branch)?;
        let mut count = index_bound(model, cutoff).max(4);
        loop {
            if first + count > MAX_INDEX {
                return Err(Error::InfeasibleTolerance(format!(
                    "cutoff {cutoff} needs more than {MAX_INDEX} eigenvalues"
                )));
            }
            let found = run(model, ext, branch, count, true)?;
            let last = found.last().map(|e| e.bracket.lo.abs().min(e.lambda.abs()));
            if matches!(last, Some(v) if v > cutoff) {
                items.extend(found.into_iter().filter(|e| within(model, e.lambda, cutoff)));
                break;
            }
            count *= 2;
        }
    }
    items.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
    Ok(EigenvalueStream { model: *model, ext, items })
}

fn within(model: &ModelSpec, lambda: f64, cutoff: f64) -> bool {
    if model.is_signed() {
        lambda.abs() <= cutoff
    } else {
        lambda <= cutoff
    }
}

/// The negative eigenvalue of a Schrödinger model, if any.
pub fn negative_modes(model: &ModelSpec, ext: Extension) -> Result<Vec<Eigenvalue>> {
    match negative_mode_condition(model, ext)? {
        NegativeMode::None => Ok(Vec::new()),
        NegativeMode::Exists(br) => {
            let n = br.index as usize;
            let lattice = Lattice::new(model, ext, lattice_count(n))?;
            Ok(vec![solve(&lattice, n, Branch::Positive)?])
        }
    }
}
