//! Admissible weight sequences `phi_n(r)` and their certified sums.
//!
//! Every built-in family has the shape `phi_n(r) = c_n * r^n` with a
//! coefficient `c_n` that does not depend on `r`, and every `c_n` is
//! dominated by `c * n^2` for `n >= 1`. Infinite sums are truncated once the
//! remainder bound `c * sum_{n >= N} n^2 r^n` drops below the requested
//! tolerance.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Default absolute tolerance for series evaluation.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Maximum number of series terms before giving up.
pub const MAX_TERMS: usize = 10_000_000;

/// Largest admissible evaluation point; everything is singular at `r = 1`.
pub const R_CAP: f64 = 1.0 - 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WeightKind {
    /// `r^n`
    Power,
    /// `(n + 1) r^n`
    PowerTimesNPlus1,
    /// `n r^n`
    PowerTimesN,
    /// `n^2 r^n`
    PowerTimesNSquared,
    /// `(alpha + 1) r^n / (n + alpha + 1)`, the Taylor terms of the Cesaro `phi_0`.
    Cesaro { alpha: f64 },
    /// `r^n / (n + beta)` for `n >= m0`, zero below `m0`.
    Bernardi { beta: f64, m0: u32 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightFamily {
    pub kind: WeightKind,
    pub description: String,
}

impl WeightFamily {
    pub fn power() -> Self {
        Self::from_kind(WeightKind::Power).expect("always valid")
    }

    pub fn power_times_n_plus_1() -> Self {
        Self::from_kind(WeightKind::PowerTimesNPlus1).expect("always valid")
    }

    pub fn power_times_n() -> Self {
        Self::from_kind(WeightKind::PowerTimesN).expect("always valid")
    }

    pub fn power_times_n_squared() -> Self {
        Self::from_kind(WeightKind::PowerTimesNSquared).expect("always valid")
    }

    pub fn cesaro(alpha: f64) -> Result<Self> {
        Self::from_kind(WeightKind::Cesaro { alpha })
    }

    pub fn bernardi(beta: f64, m0: u32) -> Result<Self> {
        Self::from_kind(WeightKind::Bernardi { beta, m0 })
    }

    /// Builds a family after checking its parameters.
    pub fn from_kind(kind: WeightKind) -> Result<Self> {
        let description = match kind {
            WeightKind::Power => "r^n".to_string(),
            WeightKind::PowerTimesNPlus1 => "(n+1) r^n".to_string(),
            WeightKind::PowerTimesN => "n r^n (phi_0 = 1)".to_string(),
            WeightKind::PowerTimesNSquared => "n^2 r^n (phi_0 = 1)".to_string(),
            WeightKind::Cesaro { alpha } => {
                if !(alpha.is_finite() && alpha > -1.0) {
                    return Err(domain(format!("Cesaro order alpha = {alpha} must exceed -1")));
                }
                format!("({alpha}+1) r^n / (n+{alpha}+1)")
            }
            WeightKind::Bernardi { beta, m0 } => {
                if !(beta.is_finite() && m0 as f64 + beta > 0.0) {
                    return Err(domain(format!(
                        "Bernardi weights need m0 + beta > 0, got m0 = {m0}, beta = {beta}"
                    )));
                }
                format!("r^n / (n+{beta}), n >= {m0}")
            }
        };
        Ok(Self { kind, description })
    }

    /// The `r`-free factor `c_n` of `phi_n(r) = c_n r^n`.
    pub fn coefficient(&self, n: u64) -> Result<f64> {
        let nf = n as f64;
        Ok(match self.kind {
            WeightKind::Power => 1.0,
            WeightKind::PowerTimesNPlus1 => nf + 1.0,
            WeightKind::PowerTimesN => nf,
            WeightKind::PowerTimesNSquared => nf * nf,
            WeightKind::Cesaro { alpha } => {
                let den = nf + alpha + 1.0;
                if den <= 0.0 || den.is_nan() {
                    return Err(domain(format!("Cesaro denominator n + alpha + 1 = {den} <= 0")));
                }
                (alpha + 1.0) / den
            }
            WeightKind::Bernardi { beta, m0 } => {
                if n < m0 as u64 {
                    0.0
                } else {
                    let den = nf + beta;
                    if den <= 0.0 || den.is_nan() {
                        return Err(domain(format!("Bernardi denominator n + beta = {den} <= 0")));
                    }
                    1.0 / den
                }
            }
        })
    }

    /// Coefficient of the comparison weight `phi_m`.
    ///
    /// Identical to [`coefficient`](Self::coefficient) except for the
    /// `n r^n` and `n^2 r^n` families at `m = 0`, whose comparison weight is
    /// the constant `1` rather than the vanishing `0 * r^0`.
    pub fn leading_coefficient(&self, m: u64) -> Result<f64> {
        match (self.kind, m) {
            (WeightKind::PowerTimesN | WeightKind::PowerTimesNSquared, 0) => Ok(1.0),
            _ => self.coefficient(m),
        }
    }

    pub fn leading_weight(&self, m: u64, r: f64) -> Result<f64> {
        check_r(r)?;
        Ok(self.leading_coefficient(m)? * powi(r, m))
    }

    /// `phi_n(r)`.
    pub fn weight_at(&self, n: u64, r: f64) -> Result<f64> {
        check_r(r)?;
        Ok(self.coefficient(n)? * powi(r, n))
    }

    /// A constant `c` with `c_n <= c n^2` for every `n >= 1`.
    pub fn domination_constant(&self) -> f64 {
        match self.kind {
            WeightKind::Power | WeightKind::PowerTimesN | WeightKind::PowerTimesNSquared => 1.0,
            WeightKind::PowerTimesNPlus1 => 2.0,
            // (alpha + 1) / (n + alpha + 1) <= 1 <= n^2
            WeightKind::Cesaro { .. } => 1.0,
            WeightKind::Bernardi { beta, m0 } => {
                // (n + beta) n^2 is increasing once n + beta > 0
                let first = m0.max(1) as f64;
                1.0 / ((first + beta) * first * first)
            }
        }
    }

    /// `sum_{n >= from_n} phi_n(r)` to absolute error `tol`.
    pub fn tail_sum(&self, from_n: u64, r: f64, tol: f64) -> Result<f64> {
        check_r(r)?;
        check_tol(tol)?;
        if let Some(closed) = self.closed_tail(from_n, r) {
            return Ok(closed);
        }
        self.series(from_n, 0, r, tol)
    }

    /// `sum_{n >= m+1} phi_n(r) / r^m`, i.e. `sum_{j >= 1} c_{m+j} r^j`.
    ///
    /// This is the quantity that stays well conditioned as `r -> 0` when the
    /// radius equation is divided through by `r^m`.
    pub fn normalized_tail(&self, m: u64, r: f64, tol: f64) -> Result<f64> {
        check_r(r)?;
        check_tol(tol)?;
        if m == 0 {
            return self.tail_sum(1, r, tol);
        }
        self.series(m + 1, m, r, tol)
    }

    /// Plain compensated partial sum `sum_{n = from_n}^{from_n + n_terms - 1} phi_n(r)`.
    pub fn partial_sum(&self, from_n: u64, r: f64, n_terms: usize) -> Result<f64> {
        check_r(r)?;
        let mut acc = CompensatedSum::default();
        let mut pow = powi(r, from_n);
        for i in 0..n_terms as u64 {
            acc.add(self.coefficient(from_n + i)? * pow);
            pow *= r;
        }
        Ok(acc.value())
    }

    fn closed_tail(&self, from_n: u64, r: f64) -> Option<f64> {
        let k = from_n as f64;
        let q = 1.0 - r;
        let rk = powi(r, from_n);
        match self.kind {
            WeightKind::Power => Some(rk / q),
            WeightKind::PowerTimesN => Some(rk * (k / q + r / (q * q))),
            WeightKind::PowerTimesNPlus1 => Some(rk * ((k + 1.0) / q + r / (q * q))),
            WeightKind::PowerTimesNSquared => Some(rk * shifted_square_sum(from_n, r)),
            WeightKind::Cesaro { alpha } if alpha == 0.0 && from_n == 0 => {
                if r == 0.0 {
                    Some(1.0)
                } else {
                    Some(-(-r).ln_1p() / r)
                }
            }
            _ => None,
        }
    }

    /// `sum_{n >= from_n} c_n r^(n - shift)`, truncated with the `n^2 r^n` bound.
    fn series(&self, from_n: u64, shift: u64, r: f64, tol: f64) -> Result<f64> {
        debug_assert!(shift <= from_n);
        if r == 0.0 {
            return if from_n == shift {
                self.coefficient(from_n)
            } else {
                Ok(0.0)
            };
        }
        let c = self.domination_constant();
        let mut acc = CompensatedSum::default();
        let mut pow = powi(r, from_n - shift);
        let mut n = from_n;
        for _ in 0..MAX_TERMS {
            acc.add(self.coefficient(n)? * pow);
            pow *= r;
            n += 1;
            // remainder: c * r^(-shift) * sum_{k >= n} k^2 r^k
            let remainder = c * pow * shifted_square_sum(n, r);
            if remainder <= tol {
                return Ok(acc.value());
            }
        }
        Err(Error::Convergence(format!(
            "{} terms of {} at r = {r} did not reach tolerance {tol}",
            MAX_TERMS, self.description
        )))
    }
}

/// Arguments of [`tail_sum`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TailSumRequest {
    pub family: WeightFamily,
    pub from_n: u64,
    pub r: f64,
    pub tol: f64,
}

pub fn weight_at(family: &WeightFamily, n: u64, r: f64) -> Result<f64> {
    family.weight_at(n, r)
}

pub fn tail_sum(req: &TailSumRequest) -> Result<f64> {
    req.family.tail_sum(req.from_n, req.r, req.tol)
}

/// `sum_{j >= 0} (n + j)^2 x^j` for `0 <= x < 1`.
pub fn shifted_square_sum(n: u64, x: f64) -> f64 {
    let nf = n as f64;
    let q = 1.0 - x;
    nf * nf / q + 2.0 * nf * x / (q * q) + x * (1.0 + x) / (q * q * q)
}

pub(crate) fn check_r(r: f64) -> Result<()> {
    if !(0.0..=R_CAP).contains(&r) {
        return Err(domain(format!("r = {r} outside the evaluation domain [0, 1 - 1e-9]")));
    }
    Ok(())
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    Ok(())
}

/// `r^n` for unsigned exponents, with `0^0 = 1`.
pub(crate) fn powi(r: f64, n: u64) -> f64 {
    if n <= i32::MAX as u64 {
        r.powi(n as i32)
    } else {
        r.powf(n as f64)
    }
}

/// Neumaier-compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
