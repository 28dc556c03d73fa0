//! Bohr radii for weighted majorant series of bounded analytic functions on
//! the shifted disks `Omega_gamma = { |z + gamma/(1-gamma)| < 1/(1-gamma) }`.

pub mod bohr;
pub mod cli;
pub mod coeffs;
pub mod error;
pub mod extremal;
pub mod radii;
pub mod report;
pub mod rootfind;
pub mod weights;

pub use error::{Error, Result};
