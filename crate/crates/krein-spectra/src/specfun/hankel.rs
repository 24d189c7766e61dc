//! Hankel symbols ⟨ν,k⟩ and the large-argument P, Q expansions.

/// ⟨ν,k⟩ = Γ(1/2+ν+k) / (k! Γ(1/2+ν-k)) in product form.
pub fn hankel_symbol(nu: f64, k: usize) -> f64 {
    let mu = 4.0 * nu * nu;
    (1..=k).fold(1.0, |acc, j| {
        let odd = (2 * j - 1) as f64;
        acc * (mu - odd * odd) / (4.0 * j as f64)
    })
}

/// P_ν(x), Q_ν(x) summed until the terms stop decreasing.
pub fn hankel_pq(nu: f64, x: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let z8 = 8.0 * x;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * z8);
        let size = term.abs();
        if size > last || size == 0.0 {
            break;
        }
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if size < 1e-17 * p.abs().max(q.abs()) {
            break;
        }
        last = size;
    }
    (p, q)
}

/// Amplitude and phase correction such that
/// J_ν(x) = sqrt(2/(πx)) · amp · cos(x - νπ/2 - π/4 + phase).
pub fn hankel_amp_phase(nu: f64, x: f64) -> (f64, f64) {
    let (p, q) = hankel_pq(nu, x);
    (p.hypot(q), q.atan2(p))
}
