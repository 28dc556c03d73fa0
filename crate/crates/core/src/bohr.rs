//! Bohr-type majorant sums for concrete coefficient sequences.

use serde::{Deserialize, Serialize};

use crate::coeffs::CoefficientSequence;
use crate::error::{domain, Error, Result};
use crate::weights::{check_r, check_tol, powi, shifted_square_sum, CompensatedSum, WeightFamily, MAX_TERMS, R_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BohrSumReport {
    pub r: f64,
    pub value: f64,
    pub bound: f64,
    pub satisfied: bool,
    pub truncation_terms: usize,
    pub tail_bound: f64,
}

impl BohrSumReport {
    fn new(r: f64, value: f64, bound: f64, truncation_terms: usize, tail_bound: f64) -> Self {
        Self { r, value, bound, satisfied: value <= bound + tail_bound, truncation_terms, tail_bound }
    }

    pub fn margin(&self) -> f64 {
        self.value - self.bound
    }
}

/// The pieces of `|a_m|^p phi_m(r) + sum_{n>m} |a_n| phi_n(r)`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct MajorantParts {
    pub lead: f64,
    pub rest: f64,
    pub bound: f64,
    pub tail_bound: f64,
    pub terms: usize,
}

pub(crate) fn majorant_parts(
    coeffs: &CoefficientSequence,
    family: &WeightFamily,
    lead_index: u64,
    p: f64,
    r: f64,
    tol: f64,
) -> Result<MajorantParts> {
    check_r(r)?;
    check_tol(tol)?;
    let m0 = coeffs.m as u64;
    for n in m0..lead_index {
        if coeffs.modulus_at(n).is_none_or(|v| v != 0.0) {
            return Err(Error::InvalidInput(format!(
                "coefficient of z^{n} must vanish below order {lead_index}"
            )));
        }
    }

    let lead_mod = coeffs.modulus_at(lead_index).unwrap_or(0.0);
    let bound = family.leading_weight(lead_index, r)?;
    let lead = lead_mod.powf(p) * bound;

    let stored_end = m0 + coeffs.moduli.len() as u64;
    let c_dom = family.domination_constant();
    // |a_{m0+k}| <= constant * ratio^k beyond the stored part
    let tail_remainder = |next: u64| -> f64 {
        match coeffs.exact_tail {
            None => 0.0,
            Some(t) => {
                let k = next.saturating_sub(m0);
                let x = t.ratio * r;
                t.constant * c_dom * powi(r, m0) * powi(x, k) * shifted_square_sum(m0 + k, x)
            }
        }
    };

    let mut acc = CompensatedSum::default();
    let mut n = lead_index + 1;
    let mut pow = powi(r, n);
    let mut terms = 0usize;
    let exact = coeffs.known_len().is_none();
    let tail_bound = loop {
        if n >= stored_end {
            let rem = tail_remainder(n);
            if !exact || rem <= tol || r == 0.0 {
                break rem;
            }
        }
        if terms >= MAX_TERMS {
            return Err(Error::Convergence(format!(
                "majorant sum at r = {r} needs more than {MAX_TERMS} terms"
            )));
        }
        let a = coeffs.modulus_at(n).unwrap_or(0.0);
        if a != 0.0 {
            acc.add(a * family.coefficient(n)? * pow);
        }
        pow *= r;
        n += 1;
        terms += 1;
    };
    Ok(MajorantParts { lead, rest: acc.value(), bound, tail_bound, terms })
}

/// `|a_m|^p phi_m(r) + sum_{n>m} |a_n| phi_n(r)` compared against `phi_m(r)`.
pub fn majorant_sum(
    coeffs: &CoefficientSequence,
    family: &WeightFamily,
    p: f64,
    r: f64,
    tol: f64,
) -> Result<BohrSumReport> {
    check_exponent(p, "p")?;
    let parts = majorant_parts(coeffs, family, coeffs.m as u64, p, r, tol)?;
    Ok(BohrSumReport::new(r, parts.lead + parts.rest, parts.bound, parts.terms, parts.tail_bound))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FunctionRadius {
    pub radius: f64,
    /// No violation anywhere on `[0, 1 - 1e-9]`.
    pub capped: bool,
    /// The inequality fails somewhere and then holds again further out.
    pub non_interval: bool,
}

/// Each term costs a full convolution row, so the cap is far below `MAX_TERMS`.
const CESARO_MAX_TERMS: usize = 200_000;

const FUNCTION_RADIUS_GRID: usize = 10_000;
const FUNCTION_RADIUS_TOL: f64 = 1e-13;
const VIOLATION_SLACK: f64 = 1e-13;

/// Supremum of the initial segment of `r` on which
/// `|a_m|^p phi_m(r) + (sum_{n>m} |a_n| phi_n(r))^q <= phi_m(r)`.
pub fn function_radius(coeffs: &CoefficientSequence, family: &WeightFamily, p: f64, q: f64) -> Result<FunctionRadius> {
    check_exponent(p, "p")?;
    check_exponent(q, "q")?;
    let violated = |r: f64| -> Result<bool> {
        let parts = majorant_parts(coeffs, family, coeffs.m as u64, p, r, FUNCTION_RADIUS_TOL)?;
        let excess = parts.lead + (parts.rest + parts.tail_bound).powf(q) - parts.bound;
        Ok(excess > VIOLATION_SLACK * parts.bound.max(1.0))
    };

    let step = R_CAP / (FUNCTION_RADIUS_GRID - 1) as f64;
    let node = |i: usize| if i + 1 == FUNCTION_RADIUS_GRID { R_CAP } else { i as f64 * step };
    let mut first_violation = None;
    let mut non_interval = false;
    for i in 0..FUNCTION_RADIUS_GRID {
        let v = violated(node(i))?;
        match (first_violation, v) {
            (None, true) => first_violation = Some(i),
            (Some(_), false) => {
                non_interval = true;
                break;
            }
            _ => {}
        }
    }
    let Some(i) = first_violation else {
        return Ok(FunctionRadius { radius: R_CAP, capped: true, non_interval: false });
    };
    if i == 0 {
        return Ok(FunctionRadius { radius: 0.0, capped: false, non_interval });
    }
    let (mut lo, mut hi) = (node(i - 1), node(i));
    for _ in 0..100 {
        if hi - lo <= 1e-14 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if violated(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(FunctionRadius { radius: lo, capped: false, non_interval })
}

/// `C^alpha_k = (alpha+1)(alpha+2)...(alpha+k)/k!`.
pub fn cesaro_binomial(alpha: f64, k: u64) -> Result<f64> {
    check_alpha(alpha)?;
    let mut c = 1.0;
    for j in 1..=k {
        let jf = j as f64;
        c *= (alpha + jf) / jf;
    }
    Ok(c)
}

/// Weights `w_{n,k} = C^alpha_{n-k} / C^{alpha+1}_n`, `k = 0..=n`.
///
/// Formed as `(alpha+1)/(n+alpha+1) * prod_{j=n-k+1}^{n} j/(alpha+j)` so the
/// binomials themselves, which overflow for large `alpha`, never appear.
/// The weights of each row sum to one.
fn cesaro_row(alpha: f64, n: usize, row: &mut Vec<f64>) {
    row.clear();
    let mut w = (alpha + 1.0) / (n as f64 + alpha + 1.0);
    row.push(w);
    for k in 1..=n {
        let j = (n - k + 1) as f64;
        w *= j / (alpha + j);
        row.push(w);
    }
}

/// `b_n = (1 / C^{alpha+1}_n) sum_{k<=n} C^alpha_{n-k} a_k` for `n < n_out`.
///
/// This is the coefficient form of `(alpha+1) int_0^1 f(tz) (1-t)^alpha / (1-tz)^(alpha+1) dt`.
pub fn cesaro_transform_values(values: &[f64], alpha: f64, n_out: usize) -> Result<Vec<f64>> {
    check_alpha(alpha)?;
    let mut row = Vec::new();
    let out = (0..n_out)
        .map(|n| {
            cesaro_row(alpha, n, &mut row);
            let mut acc = CompensatedSum::default();
            for (k, w) in row.iter().enumerate().take(values.len()) {
                acc.add(w * values[k]);
            }
            acc.value()
        })
        .collect();
    Ok(out)
}

/// Cesaro transform of the moduli; the result is indexed from `z^0`.
pub fn cesaro_transform(coeffs: &CoefficientSequence, alpha: f64, n_out: usize) -> Result<CoefficientSequence> {
    let values = (0..n_out as u64)
        .map(|n| {
            coeffs.modulus_at(n).ok_or_else(|| {
                Error::InvalidInput(format!("coefficient of z^{n} is only bounded, not known"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    CoefficientSequence::new(0, cesaro_transform_values(&values, alpha, n_out)?)
}

/// The Cesaro Bohr sum `sum_n b_n r^n` with `b` the transform of the moduli,
/// compared against `(alpha+1) sum_n r^n / (alpha+n+1)`.
pub fn cesaro_bohr_sum(coeffs: &CoefficientSequence, alpha: f64, r: f64, tol: f64) -> Result<BohrSumReport> {
    check_alpha(alpha)?;
    check_r(r)?;
    check_tol(tol)?;
    let bound = WeightFamily::cesaro(alpha)?.tail_sum(0, r, tol)?;
    let m0 = coeffs.m as u64;
    let stored_end = m0 + coeffs.moduli.len() as u64;
    let exact = coeffs.known_len().is_none();
    // every b_j is a convex combination of the moduli, so it never exceeds their sup
    let sup = coeffs.sup_from(0);

    let mut a: Vec<f64> = Vec::new();
    let mut row = Vec::new();
    let mut acc = CompensatedSum::default();
    let mut pow = 1.0;
    let mut n: u64 = 0;
    let remainder = loop {
        if n as usize >= CESARO_MAX_TERMS {
            return Err(Error::Convergence(format!(
                "Cesaro Bohr sum at r = {r} needs more than {CESARO_MAX_TERMS} terms"
            )));
        }
        a.push(if n < stored_end || exact { coeffs.modulus_at(n).unwrap_or(0.0) } else { 0.0 });
        cesaro_row(alpha, n as usize, &mut row);
        let mut b = CompensatedSum::default();
        for (k, w) in row.iter().enumerate() {
            b.add(w * a[k]);
        }
        acc.add(b.value() * pow);
        pow *= r;
        n += 1;
        let rem = sup * pow / (1.0 - r);
        if rem <= tol || r == 0.0 {
            break rem;
        }
    };
    // unknown coefficients: sum_n r^n sum_{k<=n} w_{n,k} u_k <= sum_k u_k r^k / (1 - r)
    let unknown = match coeffs.bound_tail() {
        Some(t) => {
            let x = t.ratio * r;
            t.constant * powi(r, m0) * powi(x, coeffs.moduli.len() as u64) / ((1.0 - x) * (1.0 - r))
        }
        None => 0.0,
    };
    Ok(BohrSumReport::new(r, acc.value(), bound, n as usize, remainder + unknown))
}

/// `sum_{n>=m} |a_n| r^n / (n + beta)` compared against `r^m / (m + beta)`.
pub fn bernardi_bohr_sum(coeffs: &CoefficientSequence, m: u32, beta: f64, r: f64, tol: f64) -> Result<BohrSumReport> {
    if m as f64 + beta <= 0.0 || beta.is_nan() {
        return Err(domain(format!("Bernardi sum needs m + beta > 0, got m = {m}, beta = {beta}")));
    }
    let family = WeightFamily::bernardi(beta, m)?;
    let parts = majorant_parts(coeffs, &family, m as u64, 1.0, r, tol)?;
    Ok(BohrSumReport::new(r, parts.lead + parts.rest, parts.bound, parts.terms, parts.tail_bound))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRadiusWitness {
    pub delta: f64,
    /// Per-function radius of the witness function; at most `eps`.
    pub witness_radius: f64,
}

/// The exponent `e` in `1 - (1-delta)^e < alpha eps^beta delta^e`.
fn witness_exponent(p: f64) -> f64 {
    if p == 1.0 {
        0.5
    } else {
        1.0 / p
    }
}

fn witness_gap(p: f64, eps: f64, alpha: f64, beta_exp: f64, delta: f64) -> f64 {
    let e = witness_exponent(p);
    let lhs = -((-delta).ln_1p() * e).exp_m1();
    alpha * eps.powf(beta_exp) * delta.powf(e) - lhs
}

/// A `delta` certifying that the vector-valued Bohr radius vanishes for the
/// weight shape `phi_0 = 1`, `phi_1 = alpha r^beta`.
///
/// For `p > 1` the witness is `((1-delta)^(1/p), delta^(1/p) z)` in `l^p`;
/// for `p = 1` it is the square-root pair, giving the same inequality with
/// exponent `1/2`.
pub fn zero_radius_witness(p: f64, eps: f64, alpha: f64, beta_exp: f64) -> Result<ZeroRadiusWitness> {
    if !(p.is_finite() && p >= 1.0) {
        return Err(domain(format!("p = {p} must be at least 1")));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(domain(format!("eps = {eps} must lie in (0, 1)")));
    }
    if !(alpha.is_finite() && alpha > 0.0 && beta_exp.is_finite() && beta_exp > 0.0) {
        return Err(domain("alpha and beta must be positive"));
    }
    let gap = |log_delta: f64| witness_gap(p, eps, alpha, beta_exp, 10f64.powf(log_delta));
    // for p near 1 the admissible delta shrinks like (alpha eps^beta p)^(p/(p-1))
    // and can fall below the smallest normal double
    let Some(k) = (1..=300).find(|&k| gap(-(k as f64)) > 0.0) else {
        return Err(Error::NotFound(format!(
            "no delta in 1e-1..1e-300 satisfies the witness inequality for p = {p}, eps = {eps}"
        )));
    };
    let mut good = -(k as f64);
    if k > 1 {
        let mut bad = good + 1.0;
        for _ in 0..60 {
            let mid = 0.5 * (good + bad);
            if gap(mid) > 0.0 {
                good = mid;
            } else {
                bad = mid;
            }
        }
        // back off from the boundary so the strict inequality survives rounding
        good -= 0.05;
    }
    let delta = 10f64.powf(good);
    let e = witness_exponent(p);
    let lhs = -((-delta).ln_1p() * e).exp_m1();
    let witness_radius = (lhs / (alpha * delta.powf(e))).powf(1.0 / beta_exp);
    Ok(ZeroRadiusWitness { delta, witness_radius })
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha.is_finite() && alpha > -1.0) {
        return Err(domain(format!("Cesaro order alpha = {alpha} must exceed -1")));
    }
    Ok(())
}

fn check_exponent(x: f64, name: &str) -> Result<()> {
    if !(x.is_finite() && x >= 1.0) {
        return Err(domain(format!("{name} = {x} must be at least 1")));
    }
    Ok(())
}
