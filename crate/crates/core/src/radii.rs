//! Class-level Bohr radii.
//!
//! Every radius here is the smallest root in `(0, 1)` of an equation of the
//! form `p * phi_m(r) = 2 * lambda * sum_{n > m} phi_n(r)`; on the shifted
//! disk `Omega_gamma` the coefficient-bound constant is `lambda = 1/(1+gamma)`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::rootfind::{smallest_root_with, RootConfig, RootResult};
use crate::weights::{WeightFamily, DEFAULT_TOL};

/// Bisection tolerance used for every radius.
pub const RADIUS_X_TOL: f64 = 1e-12;

fn radius_config() -> RootConfig {
    RootConfig { x_tol: RADIUS_X_TOL, ..RootConfig::default() }
}

/// Either the shift `gamma` of `Omega_gamma` or a raw coefficient-bound constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainParam {
    Gamma(f64),
    Lambda(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusProblem {
    pub family: WeightFamily,
    pub p: f64,
    pub domain: DomainParam,
    pub m: u32,
}

impl RadiusProblem {
    pub fn new(family: WeightFamily, p: f64, domain: DomainParam, m: u32) -> Result<Self> {
        check_p(p)?;
        match domain {
            DomainParam::Gamma(g) => check_gamma(g)?,
            DomainParam::Lambda(l) => check_lambda(l)?,
        }
        Ok(Self { family, p, domain, m })
    }

    pub fn lambda(&self) -> f64 {
        match self.domain {
            DomainParam::Gamma(g) => 1.0 / (1.0 + g),
            DomainParam::Lambda(l) => l,
        }
    }

    /// `(p * phi_m(r) - 2 lambda sum_{n>m} phi_n(r)) / r^m`.
    pub fn equation(&self, r: f64) -> Result<f64> {
        let m = self.m as u64;
        let lead = self.family.leading_coefficient(m)?;
        let tail = self.family.normalized_tail(m, r, DEFAULT_TOL)?;
        Ok(self.p * lead - 2.0 * self.lambda() * tail)
    }

    pub fn solve(&self) -> Result<RootResult> {
        smallest_root_with(|r| self.equation(r), &radius_config())
    }
}

/// Smallest root of `p phi_0(r) = 2 lambda sum_{n>=1} phi_n(r)`.
pub fn general_radius(family: &WeightFamily, p: f64, lambda: f64) -> Result<RootResult> {
    RadiusProblem::new(family.clone(), p, DomainParam::Lambda(lambda), 0)?.solve()
}

/// The radius `R(p, gamma)` on `Omega_gamma`.
pub fn shifted_disk_radius(family: &WeightFamily, p: f64, gamma: f64) -> Result<RootResult> {
    shifted_disk_radius_m(family, p, gamma, 0)
}

/// The radius `R(p, m, gamma)` for functions vanishing to order `m` at the origin.
pub fn shifted_disk_radius_m(family: &WeightFamily, p: f64, gamma: f64, m: u32) -> Result<RootResult> {
    RadiusProblem::new(family.clone(), p, DomainParam::Gamma(gamma), m)?.solve()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosedForm {
    R1,
    R2,
    R3,
    R4,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 4] = [ClosedForm::R1, ClosedForm::R2, ClosedForm::R3, ClosedForm::R4];

    /// The weight family whose shifted-disk radius this closed form solves.
    pub fn family(self) -> WeightFamily {
        match self {
            ClosedForm::R1 => WeightFamily::power(),
            ClosedForm::R2 => WeightFamily::power_times_n_plus_1(),
            ClosedForm::R3 => WeightFamily::power_times_n(),
            ClosedForm::R4 => WeightFamily::power_times_n_squared(),
        }
    }
}

/// `G_{p,gamma}(r) = p(1+gamma)(1-r)^3 - 2r(1+r)`.
pub fn g_cubic(p: f64, gamma: f64, r: f64) -> f64 {
    p * (1.0 + gamma) * (1.0 - r).powi(3) - 2.0 * r * (1.0 + r)
}

pub fn closed_form_radius(which: ClosedForm, p: f64, gamma: f64) -> Result<f64> {
    check_p(p)?;
    check_gamma(gamma)?;
    let x = p * (1.0 + gamma);
    Ok(match which {
        ClosedForm::R1 => x / (x + 2.0),
        ClosedForm::R2 => 1.0 - (2.0 / (x + 2.0)).sqrt(),
        ClosedForm::R3 => (x + 1.0 - (2.0 * x + 1.0).sqrt()) / x,
        ClosedForm::R4 => smallest_root_with(|r| Ok(g_cubic(p, gamma, r)), &radius_config())?.root,
    })
}

/// `phi_0` of the Cesaro operator: `(alpha + 1) sum_{n>=0} r^n / (n + alpha + 1)`.
pub fn cesaro_phi0(alpha: f64, r: f64) -> Result<f64> {
    WeightFamily::cesaro(alpha)?.tail_sum(0, r, DEFAULT_TOL)
}

/// `C_{gamma,alpha}(r) = (3+gamma)(1+alpha) sum_{n>=0} r^n/(alpha+n+1) - 2/(1-r)`.
pub fn cesaro_equation(gamma: f64, alpha: f64, r: f64) -> Result<f64> {
    Ok((3.0 + gamma) * cesaro_phi0(alpha, r)? - 2.0 / (1.0 - r))
}

/// The radius `R(gamma, alpha)` for the Cesaro operator of order `alpha`.
pub fn cesaro_radius(gamma: f64, alpha: f64) -> Result<RootResult> {
    check_gamma(gamma)?;
    WeightFamily::cesaro(alpha)?;
    smallest_root_with(|r| cesaro_equation(gamma, alpha, r), &radius_config())
}

/// `L_{m,beta,gamma}(r) = 2/(1+gamma) sum_{n>=1} r^n/(n+m+beta) - 1/(m+beta)`.
///
/// Same roots as `B_{m,beta,gamma}` after division by `r^m`; depends on
/// `(m, beta)` only through `m + beta`.
pub fn bernardi_equation(m: u32, beta: f64, gamma: f64, r: f64) -> Result<f64> {
    let s = m as f64 + beta;
    let tail = WeightFamily::bernardi(s, 0)?.tail_sum(1, r, DEFAULT_TOL)?;
    Ok(2.0 / (1.0 + gamma) * tail - 1.0 / s)
}

/// The radius `R(m, beta, gamma)` for the Bernardi operator.
pub fn bernardi_radius(m: u32, beta: f64, gamma: f64) -> Result<RootResult> {
    check_gamma(gamma)?;
    if m as f64 + beta <= 0.0 || beta.is_nan() {
        return Err(domain(format!("Bernardi radius needs m + beta > 0, got m = {m}, beta = {beta}")));
    }
    smallest_root_with(|r| bernardi_equation(m, beta, gamma, r), &radius_config())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DjakovRamanujanBounds {
    pub p: f64,
    pub lower: f64,
    pub upper: f64,
    /// Minimizer of the upper-bound expression.
    pub argmin: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PLimit {
    ToOne,
    ToTwo,
}

const DR_GRID: usize = 4096;
const DR_A_CAP: f64 = 1.0 - 1e-6;

/// `(1 + (2/p)^(1/(2-p)))^((p-2)/p)`.
pub fn djakov_ramanujan_lower(p: f64) -> f64 {
    (1.0 + (2.0 / p).powf(1.0 / (2.0 - p))).powf((p - 2.0) / p)
}

/// `(1 - a^p)^(1/p) / ((1 - a^2)^p + a^p (1 - a^p))^(1/p)`.
pub fn djakov_ramanujan_upper_expr(p: f64, a: f64) -> f64 {
    let ap = a.powf(p);
    ((1.0 - ap) / ((1.0 - a * a).powf(p) + ap * (1.0 - ap))).powf(1.0 / p)
}

/// Bounds on the `l^p` Bohr radius `r_p` for `1 < p < 2`.
pub fn djakov_ramanujan_bounds(p: f64) -> Result<DjakovRamanujanBounds> {
    if !(p > 1.0 && p < 2.0) {
        return Err(domain(format!("Djakov-Ramanujan bounds need 1 < p < 2, got {p}")));
    }
    let f = |a: f64| djakov_ramanujan_upper_expr(p, a);
    let step = DR_A_CAP / (DR_GRID - 1) as f64;
    let (mut best_i, mut best) = (0, f(0.0));
    for i in 1..DR_GRID {
        let v = f(i as f64 * step);
        if v < best {
            best = v;
            best_i = i;
        }
    }
    let lo = best_i.saturating_sub(1) as f64 * step;
    let hi = ((best_i + 1).min(DR_GRID - 1) as f64 * step).min(DR_A_CAP);
    let (mut argmin, mut upper) = golden_section_min(f, lo, hi, 1e-10);
    if best < upper {
        upper = best;
        argmin = best_i as f64 * step;
    }
    let at_cap = f(DR_A_CAP);
    if at_cap < upper {
        upper = at_cap;
        argmin = DR_A_CAP;
    }
    let lower = djakov_ramanujan_lower(p);
    Ok(DjakovRamanujanBounds { p, lower, upper: upper.max(lower), argmin })
}

/// One-sided limits of the bounds: both tend to `1/3` as `p -> 1+` and to `1` as `p -> 2-`.
pub fn djakov_ramanujan_limit(limit: PLimit) -> DjakovRamanujanBounds {
    match limit {
        PLimit::ToOne => {
            let lower = djakov_ramanujan_lower(1.0);
            DjakovRamanujanBounds { p: 1.0, lower, upper: lower, argmin: 1.0 }
        }
        PLimit::ToTwo => DjakovRamanujanBounds { p: 2.0, lower: 1.0, upper: 1.0, argmin: 0.0 },
    }
}

fn golden_section_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

pub(crate) fn check_p(p: f64) -> Result<()> {
    if !(1.0..=2.0).contains(&p) {
        return Err(domain(format!("p = {p} outside [1, 2]")));
    }
    Ok(())
}

pub(crate) fn check_gamma(gamma: f64) -> Result<()> {
    if !(0.0..1.0).contains(&gamma) {
        return Err(domain(format!("gamma = {gamma} outside [0, 1)")));
    }
    Ok(())
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(domain(format!("lambda = {lambda} must be positive")));
    }
    Ok(())
}
