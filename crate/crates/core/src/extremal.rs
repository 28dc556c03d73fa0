//! The extremal family `F_{a,m}(z) = z^m (a - w)/(1 - a w)`, `w = (1-gamma) z + gamma`.
//!
//! `w` maps the shifted disk `Omega_gamma` onto the unit disk, so `F_{a,m}`
//! is bounded by one there. Its Taylor coefficients at the origin are
//! `A_0 = (a-gamma)/(1-a gamma)` and
//! `-A_n = -(1-a^2)/(a(1-a gamma)) * (a(1-gamma)/(1-a gamma))^n`, a geometric
//! sequence, which is what makes the sums below certifiable.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bohr::majorant_parts;
use crate::coeffs::{CoefficientSequence, GeometricTail};
use crate::error::{domain, Result};
use crate::radii::{check_gamma, check_p};
use crate::weights::{check_r, WeightFamily};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtremalParams {
    pub a: f64,
    pub gamma: f64,
    pub m: u32,
    pub n_terms: usize,
}

impl ExtremalParams {
    pub fn new(a: f64, gamma: f64, m: u32, n_terms: usize) -> Result<Self> {
        if !(a > 0.0 && a < 1.0) {
            return Err(domain(format!("extremal parameter a = {a} outside (0, 1)")));
        }
        check_gamma(gamma)?;
        if n_terms < 1 {
            return Err(domain("n_terms must be at least 1"));
        }
        Ok(Self { a, gamma, m, n_terms })
    }

    /// `|A_0|`.
    pub fn leading_modulus(&self) -> f64 {
        (self.a - self.gamma).abs() / (1.0 - self.a * self.gamma)
    }

    /// `a(1-gamma)/(1-a gamma)`, the geometric ratio of `|A_n|`.
    pub fn ratio(&self) -> f64 {
        self.a * (1.0 - self.gamma) / (1.0 - self.a * self.gamma)
    }

    /// `(1-a^2)/(a(1-a gamma))`, so that `|A_n| = scale * ratio^n` for `n >= 1`.
    pub fn scale(&self) -> f64 {
        (1.0 - self.a * self.a) / (self.a * (1.0 - self.a * self.gamma))
    }

    /// `|A_n|` for `n >= 1`, written without the `1/a` factor that the scale form carries.
    pub fn modulus(&self, n: u32) -> f64 {
        if n == 0 {
            return self.leading_modulus();
        }
        let q = 1.0 - self.a * self.gamma;
        (1.0 - self.a * self.a) * self.a.powi(n as i32 - 1) * (1.0 - self.gamma).powi(n as i32) / q.powi(n as i32 + 1)
    }
}

/// Moduli `|A_0|, ..., |A_{n_terms}|` placed at `z^m, ..., z^{m+n_terms}`, with
/// the exact geometric tail attached.
pub fn extremal_coefficients(params: &ExtremalParams) -> CoefficientSequence {
    let moduli = (0..=params.n_terms as u32).map(|n| params.modulus(n)).collect();
    CoefficientSequence {
        m: params.m,
        moduli,
        exact_tail: Some(GeometricTail { ratio: params.ratio(), constant: params.scale(), exact: true }),
    }
}

/// Whether `z` lies in `Omega_gamma = { |z + gamma/(1-gamma)| < 1/(1-gamma) }`.
pub fn in_shifted_disk(gamma: f64, z: Complex64) -> bool {
    (z + gamma / (1.0 - gamma)).norm() < 1.0 / (1.0 - gamma)
}

pub fn extremal_eval(params: &ExtremalParams, z: Complex64) -> Result<Complex64> {
    if !in_shifted_disk(params.gamma, z) {
        return Err(domain(format!("z = {z} lies outside Omega_gamma for gamma = {}", params.gamma)));
    }
    let w = z * (1.0 - params.gamma) + params.gamma;
    let f = (params.a - w) / (1.0 - w * params.a);
    Ok(f * z.powu(params.m))
}

/// `(1 - |A_0|^2)/(1 + gamma)`, the bound on `|A_n|`, `n >= 1`, for functions bounded by one on `Omega_gamma`.
pub fn coefficient_bound(a0_modulus: f64, gamma: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&a0_modulus) {
        return Err(domain(format!("|A_0| = {a0_modulus} outside [0, 1)")));
    }
    if !(gamma.is_finite() && gamma > -1.0) {
        return Err(domain(format!("gamma = {gamma} must exceed -1")));
    }
    Ok((1.0 - a0_modulus * a0_modulus) / (1.0 + gamma))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SharpnessHit {
    pub a: f64,
    pub margin: f64,
}

/// `a = 1 - 10^-k` for `k = 1..=8`.
pub fn default_a_schedule() -> Vec<f64> {
    (1..=8).map(|k| 1.0 - 10f64.powi(-k)).collect()
}

const SHARPNESS_TOL: f64 = 1e-14;

/// `M(a, r) = |A_m|^p phi_m(r) + sum_{n>m} |A_n| phi_n(r)` for `F_{a,m}`, and its bound `phi_m(r)`.
pub fn extremal_majorant(family: &WeightFamily, p: f64, params: &ExtremalParams, r: f64) -> Result<(f64, f64, f64)> {
    let coeffs = extremal_coefficients(params);
    let parts = majorant_parts(&coeffs, family, params.m as u64, p, r, SHARPNESS_TOL)?;
    Ok((parts.lead + parts.rest, parts.bound, parts.tail_bound))
}

/// First `a` in the schedule whose extremal function violates the Bohr inequality at `r`.
pub fn sharpness_witness(
    family: &WeightFamily,
    p: f64,
    gamma: f64,
    m: u32,
    r: f64,
    a_schedule: &[f64],
) -> Result<Option<SharpnessHit>> {
    check_p(p)?;
    check_gamma(gamma)?;
    check_r(r)?;
    if r == 0.0 {
        return Ok(None);
    }
    for &a in a_schedule {
        let params = ExtremalParams::new(a, gamma, m, 1)?;
        let (value, bound, tail) = extremal_majorant(family, p, &params, r)?;
        let margin = value - bound;
        if margin > tail + 4.0 * f64::EPSILON * bound.max(value) {
            return Ok(Some(SharpnessHit { a, margin }));
        }
    }
    Ok(None)
}
