//! Spectra, spectral functions and pole tables of one-dimensional singular
//! operators with families of self-adjoint extensions.

pub mod asympt;
pub mod cli;
pub mod error;
pub mod models;
pub mod roots;
pub mod specfn;
pub mod specfun;
pub mod spectrum;

pub use error::{Error, Result};
