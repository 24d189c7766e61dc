//! Real-parameter special functions.

pub mod bernoulli;
pub mod bessel;
pub mod gamma;
pub mod hankel;
pub mod kummer;
pub mod zeta;
pub mod zeros;

pub use bernoulli::{bernoulli_even, bernoulli_number, bernoulli_poly};
pub use bessel::{bessel, bessel_i, bessel_i_scaled, bessel_j, bessel_k, bessel_k_scaled, bessel_y, BesselKind};
pub use gamma::{cos_pi, digamma, gamma, gamma_ratio, lgamma, log_rgamma, rgamma, sin_pi, trigamma, EULER_GAMMA};
pub use hankel::{hankel_amp_phase, hankel_pq, hankel_symbol};
pub use kummer::{kummer, kummer_m, kummer_u, KummerKind};
pub use zeros::{bessel_j_zero, bessel_j_zeros, mcmahon};
pub use zeta::{hurwitz_zeta, riemann_zeta};
