//! Positive zeros j_{ν,n} of J_ν for ν > -1.

use std::f64::consts::PI;

use super::bessel::bessel_j;
use crate::error::{Error, Result};
use crate::roots::bracketed_root;

const SCAN_LIMIT: f64 = 25.0;

fn j(nu: f64, x: f64) -> f64 {
    bessel_j(nu, x).unwrap_or(f64::NAN)
}

fn check_order(nu: f64) -> Result<()> {
    if nu > -1.0 && nu <= 6.0 {
        Ok(())
    } else {
        Err(Error::domain("bessel_j_zero", format!("order {nu} outside (-1, 6]")))
    }
}

fn refine(nu: f64, lo: f64, hi: f64) -> Result<f64> {
    bracketed_root(|x| j(nu, x), lo, hi).map(|r| r.x)
}

/// All zeros below the scan limit, located on a grid and refined.
fn scanned_zeros(nu: f64) -> Result<Vec<f64>> {
    let mut grid = Vec::new();
    let mut x = 1e-4;
    while x < 0.5 {
        grid.push(x);
        x *= 1.25;
    }
    let mut x = 0.5;
    while x <= SCAN_LIMIT {
        grid.push(x);
        x += 0.05;
    }
    let mut out = Vec::new();
    let mut prev = (grid[0], j(nu, grid[0]));
    for &x in &grid[1..] {
        let v = j(nu, x);
        if v == 0.0 {
            out.push(x);
        } else if prev.1 != 0.0 && v.signum() != prev.1.signum() {
            out.push(refine(nu, prev.0, x)?);
        }
        prev = (x, v);
    }
    Ok(out)
}

/// McMahon's large-zero expansion.
pub fn mcmahon(nu: f64, n: f64) -> f64 {
    let beta = (n + 0.5 * nu - 0.25) * PI;
    let mu = 4.0 * nu * nu;
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8.powi(5))
        - 64.0 * (mu - 1.0) * (6949.0 * mu.powi(3) - 153855.0 * mu * mu + 1585743.0 * mu - 6277237.0)
            / (105.0 * b8.powi(7))
}

fn zero_from_seed(nu: f64, n: usize, floor: f64) -> Result<f64> {
    let seed = mcmahon(nu, n as f64);
    let mut lo = (seed - 0.5).max(floor + 1e-9);
    let mut hi = seed + 0.5;
    let (flo, fhi) = (j(nu, lo), j(nu, hi));
    if flo.signum() == fhi.signum() {
        lo = (seed - 1.2).max(floor + 1e-9);
        hi = seed + 1.2;
        if j(nu, lo).signum() == j(nu, hi).signum() {
            return Err(Error::BracketFailure(format!(
                "no sign change of J_{nu} around McMahon seed {seed} (n = {n})"
            )));
        }
    }
    refine(nu, lo, hi)
}

/// The first `count` positive zeros of J_ν.
pub fn bessel_j_zeros(nu: f64, count: usize) -> Result<Vec<f64>> {
    check_order(nu)?;
    let mut zs = scanned_zeros(nu)?;
    zs.truncate(count);
    while zs.len() < count {
        let floor = zs.last().copied().unwrap_or(0.0);
        let z = zero_from_seed(nu, zs.len() + 1, floor)?;
        if z <= floor {
            return Err(Error::Numerical(format!("zeros of J_{nu} out of order at n = {}", zs.len() + 1)));
        }
        zs.push(z);
    }
    Ok(zs)
}

/// The n-th positive zero j_{ν,n}, n ≥ 1.
pub fn bessel_j_zero(nu: f64, n: usize) -> Result<f64> {
    check_order(nu)?;
    if n == 0 {
        return Err(Error::domain("bessel_j_zero", "index starts at 1"));
    }
    if mcmahon(nu, n as f64) < SCAN_LIMIT + 4.0 {
        let zs = bessel_j_zeros(nu, n)?;
        return Ok(zs[n - 1]);
    }
    zero_from_seed(nu, n, 0.0)
}
