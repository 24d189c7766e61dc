//! Confluent hypergeometric functions M(a,b,z) and U(a,b,z) for real parameters, z > 0.

use super::gamma::lgamma;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KummerKind {
    M,
    U,
}

fn check(function: &'static str, z: f64) -> Result<()> {
    if z > 0.0 && z.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(function, format!("requires z > 0, got {z}")))
    }
}

fn m_series(a: f64, b: f64, z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..2000 {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() && kf > z {
            break;
        }
    }
    sum
}

/// Unevaluated sum hi + lo carrying roughly 32 significant digits.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    fn renorm(hi: f64, lo: f64) -> Self {
        let s = hi + lo;
        Dd { hi: s, lo: lo - (s - hi) }
    }

    fn sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        Dd { hi: s, lo: (a - (s - bb)) + (b - bb) }
    }

    fn add(self, o: Dd) -> Self {
        let s = Dd::sum(self.hi, o.hi);
        Dd::renorm(s.hi, s.lo + self.lo + o.lo)
    }

    fn mul(self, o: Dd) -> Self {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        Dd::renorm(p, e + self.hi * o.lo + self.lo * o.hi)
    }

    fn div(self, o: Dd) -> Self {
        let q1 = self.hi / o.hi;
        let r = self.add(o.mul(Dd::new(-q1)));
        let q2 = r.hi / o.hi;
        let r = r.add(o.mul(Dd::new(-q2)));
        let q3 = r.hi / o.hi;
        let q = Dd::renorm(q1, q2);
        q.add(Dd::new(q3))
    }
}

/// Series in double-double arithmetic, for the cancelling case a < 0.
fn m_series_dd(a: f64, b: f64, z: f64) -> f64 {
    let zd = Dd::new(z);
    let mut term = Dd::new(1.0);
    let mut sum = Dd::new(1.0);
    for k in 0..4000 {
        let kf = k as f64;
        let num = Dd::sum(a, kf).mul(zd);
        let den = Dd::sum(b, kf).mul(Dd::new(kf + 1.0));
        term = term.mul(num).div(den);
        sum = sum.add(term);
        if term.hi == 0.0 || (term.hi.abs() <= 1e-34 * sum.hi.abs() && kf > z) {
            break;
        }
    }
    sum.hi
}

/// M(a,b,z) = ₁F₁(a;b;z).
pub fn kummer_m(a: f64, b: f64, z: f64) -> Result<f64> {
    check("kummer_m", z)?;
    if b <= 0.0 && b == b.floor() {
        return Err(Error::domain("kummer_m", format!("b = {b} is a nonpositive integer")));
    }
    if a >= 0.0 {
        Ok(m_series(a, b, z))
    } else {
        Ok(m_series_dd(a, b, z))
    }
}

/// U(a,b,z) for a ≥ 1 from (1/Γ(a)) ∫_0^∞ e^{-zt} t^{a-1} (1+t)^{b-a-1} dt, t = e^u.
fn u_integral(a: f64, b: f64, z: f64) -> Result<f64> {
    let log_f = |u: f64| -z * u.exp() + a * u + (b - a - 1.0) * u.exp().ln_1p();
    let mut peak = -60.0;
    let mut peak_val = f64::NEG_INFINITY;
    let mut u = -60.0;
    while u <= 60.0 {
        let v = log_f(u);
        if v > peak_val {
            peak_val = v;
            peak = u;
        }
        u += 0.25;
    }
    let h = 0.04;
    let mut sum = 1.0;
    for dir in [-1.0, 1.0] {
        let mut k = 1;
        loop {
            let v = (log_f(peak + dir * h * k as f64) - peak_val).exp();
            sum += v;
            if v < 1e-20 || k > 20_000 {
                break;
            }
            k += 1;
        }
    }
    let (lg, _) = lgamma(a)?;
    Ok(h * sum * (peak_val - lg).exp())
}

/// U(a,b,z), Tricomi's confluent hypergeometric function.
pub fn kummer_u(a: f64, b: f64, z: f64) -> Result<f64> {
    check("kummer_u", z)?;
    if a >= 1.0 {
        return u_integral(a, b, z);
    }
    // U(a-1) = -(b-2a-z) U(a) - a(a-b+1) U(a+1), run downward from a0 ∈ [1,2)
    let shift = (1.0 - a).ceil();
    let a0 = a + shift;
    let mut upper = u_integral(a0 + 1.0, b, z)?;
    let mut cur = u_integral(a0, b, z)?;
    let mut ak = a0;
    while ak > a + 0.5 {
        let next = -(b - 2.0 * ak - z) * cur - ak * (ak - b + 1.0) * upper;
        upper = cur;
        cur = next;
        ak -= 1.0;
    }
    Ok(cur)
}

pub fn kummer(kind: KummerKind, a: f64, b: f64, z: f64) -> Result<f64> {
    match kind {
        KummerKind::M => kummer_m(a, b, z),
        KummerKind::U => kummer_u(a, b, z),
    }
}
