//! Bernoulli numbers and polynomials.

/// Exact B_{2m} for m = 0..=15 as (numerator, denominator).
pub const BERNOULLI_EVEN: [(i64, i64); 16] = [
    (1, 1),
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
    (-23749461029, 870),
    (8615841276005, 14322),
];

pub const MAX_EVEN_INDEX: usize = 30;

/// B_{2m} as a float.
pub fn bernoulli_even(m: usize) -> f64 {
    let (p, q) = BERNOULLI_EVEN[m];
    p as f64 / q as f64
}

/// B_n with the B_1 = -1/2 convention, n ≤ 31.
pub fn bernoulli_number(n: usize) -> f64 {
    assert!(n <= MAX_EVEN_INDEX + 1, "Bernoulli table ends at B_30");
    match n {
        1 => -0.5,
        n if n % 2 == 1 => 0.0,
        n => bernoulli_even(n / 2),
    }
}

/// B_n(x) = Σ_k C(n,k) B_k(1/2) (x − 1/2)^{n−k}, n ≤ 31, with
/// B_k(1/2) = (2^{1−k} − 1) B_k. Expanding about 1/2 keeps the terms
/// bounded by |B_n| on [0, 1] and the parity about 1/2 exact.
pub fn bernoulli_poly(n: usize, x: f64) -> f64 {
    let t = x - 0.5;
    let mut binom = 1.0;
    let mut acc = 0.0;
    for k in 0..=n {
        // odd B_k(1/2) vanish, B_1 included
        if k % 2 == 0 {
            let bk = (2f64.powi(1 - k as i32) - 1.0) * bernoulli_number(k);
            acc += binom * bk * t.powi((n - k) as i32);
        }
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    acc
}
