use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{gamma_ratio_coeffs, resolvent_asymptotic_coeffs, series_exp, AsymptoticSeries, SeriesTerm, Variable};
use crate::error::{Error, Result};
use crate::models::{gamma_quotient, interval_c, Extension, ModelKind, ModelSpec};
use crate::specfun::{bernoulli_number, bernoulli_poly, lgamma, sin_pi};

/// Poles closer than this are merged.
pub const MERGE_TOLERANCE: f64 = 1e-9;

/// Which formula produced a pole entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PoleSource {
    /// The Weyl-law pole.
    Leading,
    /// Extension-independent poles from the large-λ resolvent expansion.
    Regular,
    /// Poles whose position depends on the singularity strength.
    Anomalous,
    /// Coincident poles from different formulas.
    Merged,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoleEntry {
    pub s: f64,
    pub residue: f64,
    pub multiplicity: u32,
    pub source: PoleSource,
}

impl PoleEntry {
    fn simple(s: f64, residue: f64, source: PoleSource) -> Self {
        PoleEntry { s, residue, multiplicity: 1, source }
    }
}

/// Simple poles of a spectral zeta function, sorted by s descending.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct PoleTable {
    pub entries: Vec<PoleEntry>,
}

impl PoleTable {
    /// Sorts and merges entries closer than `MERGE_TOLERANCE`.
    pub fn from_entries(mut entries: Vec<PoleEntry>) -> Self {
        entries.sort_by(|a, b| b.s.total_cmp(&a.s));
        let mut merged: Vec<PoleEntry> = Vec::with_capacity(entries.len());
        for e in entries {
            match merged.last_mut() {
                Some(last) if (last.s - e.s).abs() < MERGE_TOLERANCE => {
                    last.residue += e.residue;
                    last.multiplicity = last.multiplicity.max(e.multiplicity);
                    if last.source != e.source {
                        last.source = PoleSource::Merged;
                    }
                }
                _ => merged.push(e),
            }
        }
        PoleTable { entries: merged }
    }

    pub fn residue_at(&self, s: f64) -> Option<f64> {
        self.entries.iter().find(|e| (e.s - s).abs() < MERGE_TOLERANCE).map(|e| e.residue)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// One C_{N,n} coefficient of the oscillator resolvent expansion together
/// with the heat-trace coefficient of t^{Nν+2n} it produces.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeatCoefficient {
    pub big_n: u32,
    pub n: u32,
    pub s: f64,
    pub c: f64,
    pub heat_coefficient: f64,
}

/// b_n(ν, N) for n = 0..=n_max.
fn b_coeffs(a: &[f64], big_n: f64, n_max: usize) -> Result<Vec<f64>> {
    let terms = a.iter().enumerate().map(|(m, &am)| SeriesTerm::real(2.0 * (m + 1) as f64, big_n * am)).collect();
    let input = AsymptoticSeries::new(Variable::InvLambda, terms)?;
    Ok(series_exp(&input, 2 * n_max)?.terms().iter().step_by(2).map(|t| t.coefficient).collect())
}

/// Oscillator C_{N,n} table for N = 1..=N_max, n = 0..=n_max, with the
/// pole table (s = 1 and s = −Nν−2n).
///
/// C_{N,n} = −(4^ν Γ(ν)/Γ(−ν) θ)^N (ν + 2n/N) b_n(ν, N), the residue at
/// s_{N,n} is C_{N,n} sin(πNν)/π and the heat coefficient of t^{Nν+2n} is
/// −C_{N,n}/Γ(1+Nν+2n).
pub fn heat_exp_coeffs(nu: f64, theta: f64, n_big_max: usize, n_max: usize) -> Result<(Vec<HeatCoefficient>, PoleTable)> {
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::InvalidParameter(format!("nu must lie in (0, 1), got {nu}")));
    }
    let a = gamma_ratio_coeffs(nu, n_max.clamp(1, 15))?;
    let g = 4f64.powf(nu) * gamma_quotient(nu) * theta;
    let mut rows = Vec::new();
    for big_n in 1..=n_big_max {
        let nn = big_n as f64;
        let b = b_coeffs(&a, nn, n_max)?;
        for (n, bn) in b.iter().enumerate() {
            let p = nn * nu + 2.0 * n as f64;
            let c = -g.powi(big_n as i32) * (nu + 2.0 * n as f64 / nn) * bn;
            let (lg, sg) = lgamma(1.0 + p)?;
            rows.push(HeatCoefficient {
                big_n: big_n as u32,
                n: n as u32,
                s: -p,
                c,
                heat_coefficient: -c * sg * (-lg).exp(),
            });
        }
    }
    let mut entries = vec![PoleEntry::simple(1.0, 0.25, PoleSource::Leading)];
    entries.extend(rows.iter().map(|r| {
        PoleEntry::simple(r.s, r.c * sin_pi(r.big_n as f64 * nu) / PI, PoleSource::Anomalous)
    }));
    Ok((rows, PoleTable::from_entries(entries)))
}

fn count_to(s_min: f64, spacing: f64) -> usize {
    ((1.0 - s_min) / spacing).floor().max(0.0) as usize + 1
}

fn interval_poles(nu: f64, ext: Extension, s_min: f64) -> Result<Vec<PoleEntry>> {
    let model = ModelSpec::interval(nu)?;
    let order_nu = match ext {
        Extension::Infinity => nu,
        Extension::Finite(_) => -nu,
    };
    let n_max = count_to(s_min + 0.5, 1.0).min(5);
    let a = resolvent_asymptotic_coeffs(&model, order_nu, 2 * n_max + 1)?;
    let mut entries: Vec<PoleEntry> = (0..=n_max)
        .map(|n| {
            let ak = a.coefficient((2 * n + 1) as f64);
            // Re{i · i ak} = −ak for an imaginary-tagged coefficient
            PoleEntry::simple(0.5 - n as f64, ak / PI, PoleSource::Regular)
        })
        .filter(|e| e.s >= s_min)
        .collect();
    if let Extension::Finite(theta) = ext {
        if nu > 0.0 && theta != 0.0 {
            let ct = interval_c(nu) * theta;
            entries.extend((1..).map(|k| k as f64).take_while(|k| -nu * k >= s_min).map(|k| {
                PoleEntry::simple(-nu * k, -nu * ct.powf(k) * sin_pi(nu * k) / PI, PoleSource::Anomalous)
            }));
        }
    }
    Ok(entries)
}

fn dirac_poles(nu: f64, ext: Extension, s_min: f64) -> Result<Vec<PoleEntry>> {
    let model = ModelSpec::dirac_nu(nu)?;
    let base_nu = match ext {
        Extension::Infinity => nu,
        Extension::Finite(b) if b == 0.0 || nu < 0.5 => -nu,
        Extension::Finite(_) => nu,
    };
    let n_max = count_to(s_min, 2.0).min(5);
    let a = resolvent_asymptotic_coeffs(&model, base_nu, 2 * n_max + 1)?;
    let mut entries = vec![PoleEntry::simple(1.0, 1.0 / PI, PoleSource::Leading)];
    entries.extend(
        (1..=n_max)
            .map(|n| {
                let ak = a.coefficient((2 * n + 1) as f64);
                PoleEntry::simple(1.0 - 2.0 * n as f64, -ak / (2.0 * n as f64 * PI), PoleSource::Regular)
            })
            .filter(|e| e.s >= s_min),
    );
    if let Extension::Finite(beta) = ext {
        let gap = (1.0 - 2.0 * nu).abs();
        if beta != 0.0 && gap > 1e-12 {
            entries.extend((1..).map(|k| k as f64).take_while(|k| -gap * k >= s_min).map(|k| {
                let residue = if nu < 0.5 {
                    gap * beta.powf(k) * sin_pi(nu * k) / PI
                } else {
                    -gap * sin_pi(nu * k) / (PI * beta.powf(k))
                };
                PoleEntry::simple(-gap * k, residue, PoleSource::Anomalous)
            }));
        }
    }
    Ok(entries.into_iter().filter(|e| e.s >= s_min).collect())
}

/// A_{N,n}(κ) is only tabulated for N, n ≤ 3.
const AB_MAX: usize = 3;

fn ab_poles(kappa: f64, ext: Extension, s_min: f64) -> Result<Vec<PoleEntry>> {
    let mut entries = vec![PoleEntry::simple(2.0, 0.5, PoleSource::Leading)];
    let Extension::Finite(beta) = ext else {
        return Ok(entries);
    };
    if beta == 0.0 {
        return Ok(entries);
    }
    let gap = 1.0 - 2.0 * kappa;
    let l_terms = (1..=2 * AB_MAX)
        .map(|m| {
            let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
            let c = sign * (bernoulli_poly(m + 1, kappa) - bernoulli_number(m + 1)) / (m * (m + 1)) as f64
                * 4f64.powi(m as i32);
            SeriesTerm::real(2.0 * m as f64, c)
        })
        .collect();
    let l = AsymptoticSeries::new(Variable::InvLambda, l_terms)?;
    for big_n in 1..=AB_MAX {
        let nn = big_n as f64;
        let scaled: Vec<SeriesTerm> =
            l.terms().iter().map(|t| SeriesTerm::real(t.exponent, nn * t.coefficient)).collect();
        let b = series_exp(&AsymptoticSeries::new(Variable::InvLambda, scaled)?, 2 * AB_MAX)?;
        for n in 0..=AB_MAX {
            let p = nn * gap + 2.0 * n as f64;
            if -p < s_min {
                continue;
            }
            let bnn = b.coefficient(2.0 * n as f64);
            let sign = if (big_n + n) % 2 == 0 { 1.0 } else { -1.0 };
            let residue = sign * p * beta.powi(big_n as i32) * 4f64.powf(-kappa * nn) * bnn * sin_pi(nn * kappa)
                / (PI * nn);
            entries.push(PoleEntry::simple(-p, residue, PoleSource::Anomalous));
        }
    }
    Ok(entries)
}

/// Poles and residues of the spectral zeta function with s ≥ `s_min`.
///
/// Oscillator and interval: ζ(s) = Σ λ_n^{−s} (interval anomalous poles
/// for finite θ ≠ 0). Dirac and Aharonov–Bohm: the positive-branch
/// function ζ₊(s) = Σ_{λ>0} λ^{−s}.
pub fn pole_table(model: &ModelSpec, ext: Extension, s_min: f64) -> Result<PoleTable> {
    if !s_min.is_finite() {
        return Err(Error::InvalidParameter("s_min must be finite".into()));
    }
    let p = model.param();
    let entries = match model.kind() {
        ModelKind::Oscillator => match ext {
            Extension::Infinity => vec![PoleEntry::simple(1.0, 0.25, PoleSource::Leading)],
            Extension::Finite(theta) => {
                let n_big = ((-s_min) / p).floor().max(0.0) as usize;
                let n_max = ((-s_min) / 2.0).floor().max(0.0) as usize;
                if n_big > 200 {
                    return Err(Error::InvalidParameter(format!("s_min = {s_min} needs too many pole families")));
                }
                heat_exp_coeffs(p, theta, n_big.max(1), n_max)?
                    .1
                    .entries
                    .into_iter()
                    .filter(|e| e.s >= s_min)
                    .collect()
            }
        },
        ModelKind::Interval => interval_poles(p, ext, s_min)?,
        ModelKind::Dirac => dirac_poles(0.5 - p, ext, s_min)?,
        ModelKind::AharonovBohm => ab_poles(p, ext, s_min)?,
        ModelKind::Susy => return Err(Error::Unsupported("pole table for the supercharge".into())),
    };
    Ok(PoleTable::from_entries(entries))
}

/// Poles of η(s) = ζ₊^β(s) − ζ₊^{−β}(s) for the Dirac model: twice the odd
/// anomalous entries of ζ₊.
pub fn eta_pole_table(model: &ModelSpec, ext: Extension, s_min: f64) -> Result<PoleTable> {
    if model.kind() != ModelKind::Dirac {
        return Err(Error::Unsupported(format!("eta pole table for the {} model", model.kind().name())));
    }
    let plus = pole_table(model, ext, s_min)?;
    let minus = pole_table(model, ext.mirrored(), s_min)?;
    let entries = plus
        .entries
        .iter()
        .filter(|e| e.source == PoleSource::Anomalous)
        .map(|e| {
            let r = e.residue - minus.residue_at(e.s).unwrap_or(0.0);
            PoleEntry::simple(e.s, r, PoleSource::Anomalous)
        })
        .filter(|e| e.residue.abs() > 0.0)
        .collect();
    Ok(PoleTable::from_entries(entries))
}
