//! Bracketed scalar root finding: bisection down to a coarse width, then
//! Newton steps safeguarded by the bracket.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub fx: f64,
    pub lo: f64,
    pub hi: f64,
    pub evaluations: usize,
}

const COARSE_WIDTH: f64 = 1e-3;
const MAX_ITER: usize = 200;

pub fn bracketed_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<Root> {
    let (mut a, mut b) = if lo < hi { (lo, hi) } else { (hi, lo) };
    let mut fa = f(a);
    let fb = f(b);
    let mut evals = 2;
    if fa == 0.0 {
        return Ok(Root { x: a, fx: 0.0, lo, hi, evaluations: evals });
    }
    if fb == 0.0 {
        return Ok(Root { x: b, fx: 0.0, lo, hi, evaluations: evals });
    }
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return Err(Error::BracketFailure(format!(
            "no sign change on [{a}, {b}]: f(lo) = {fa:e}, f(hi) = {fb:e}"
        )));
    }
    while b - a > COARSE_WIDTH * (1.0 + a.abs().max(b.abs())) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        evals += 1;
        if fm == 0.0 {
            return Ok(Root { x: m, fx: 0.0, lo, hi, evaluations: evals });
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    let mut x = 0.5 * (a + b);
    let mut fx = f(x);
    evals += 1;
    for _ in 0..MAX_ITER {
        if fx == 0.0 {
            break;
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        let scale = 1.0 + x.abs();
        let h = 1e-7 * scale;
        let d = (f(x + h) - f(x - h)) / (2.0 * h);
        evals += 2;
        let newton = x - fx / d;
        let next = if d.is_finite() && d != 0.0 && newton > a && newton < b {
            newton
        } else {
            0.5 * (a + b)
        };
        let step = (next - x).abs();
        x = next;
        fx = f(x);
        evals += 1;
        if step <= 4.0 * f64::EPSILON * scale || b - a <= 4.0 * f64::EPSILON * scale {
            break;
        }
    }
    if !fx.is_finite() {
        return Err(Error::Numerical(format!("residual not finite at {x}")));
    }
    Ok(Root { x, fx, lo, hi, evaluations: evals })
}
