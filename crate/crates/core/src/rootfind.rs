//! Leftmost root of a scalar function on a sub-interval of `(0, 1)`.
//!
//! A uniform grid is scanned from the left until the first sign change,
//! which is then refined by bisection. Grid nodes are evaluated lazily so
//! functions that are expensive or undefined near `r = 1` are only touched
//! when no earlier root exists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootConfig {
    pub lo_cap: f64,
    pub hi_cap: f64,
    pub grid_points: usize,
    pub x_tol: f64,
    pub residual_tol: f64,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self {
            lo_cap: 1e-9,
            hi_cap: 1.0 - 1e-9,
            grid_points: 1024,
            x_tol: 1e-10,
            residual_tol: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootResult {
    pub root: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub residual: f64,
    pub iterations: u32,
    /// Set when no sign change exists and the root is a grid node where `|g|`
    /// dips below the residual tolerance.
    pub tangency: bool,
}

const MAX_BISECTIONS: u32 = 200;

pub fn smallest_root<F>(g: F, grid_points: usize, x_tol: f64) -> Result<RootResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let config = RootConfig { grid_points, x_tol, ..RootConfig::default() };
    smallest_root_with(g, &config)
}

pub fn smallest_root_with<F>(mut g: F, config: &RootConfig) -> Result<RootResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(config.x_tol.is_finite() && config.x_tol > 0.0) {
        return Err(Error::InvalidTolerance(config.x_tol));
    }
    if config.grid_points < 2 {
        return Err(Error::InvalidInput(format!(
            "grid_points = {} must be at least 2",
            config.grid_points
        )));
    }
    if config.lo_cap >= config.hi_cap || config.lo_cap.is_nan() || config.hi_cap.is_nan() {
        return Err(Error::InvalidInput(format!(
            "empty scan interval [{}, {}]",
            config.lo_cap, config.hi_cap
        )));
    }

    let mut eval = |x: f64| -> Result<f64> {
        let v = g(x)?;
        if v.is_nan() {
            return Err(Error::Domain(format!("function is NaN at {x}")));
        }
        Ok(v)
    };

    let lo = config.lo_cap;
    let g_lo = eval(lo)?;
    if g_lo.abs() <= config.residual_tol {
        return Ok(RootResult {
            root: lo,
            bracket_lo: lo,
            bracket_hi: lo,
            residual: g_lo,
            iterations: 0,
            tangency: false,
        });
    }

    let step = (config.hi_cap - lo) / (config.grid_points - 1) as f64;
    let node = |i: usize| {
        if i + 1 == config.grid_points {
            config.hi_cap
        } else {
            lo + i as f64 * step
        }
    };

    let (mut prev_x, mut prev_g) = (lo, g_lo);
    let (mut best_x, mut best_g) = (lo, g_lo);
    for i in 1..config.grid_points {
        let x = node(i);
        let gx = eval(x)?;
        if gx == 0.0 {
            return Ok(RootResult {
                root: x,
                bracket_lo: x,
                bracket_hi: x,
                residual: 0.0,
                iterations: 0,
                tangency: false,
            });
        }
        if gx.signum() != prev_g.signum() {
            return bisect(&mut eval, prev_x, x, prev_g, config.x_tol);
        }
        if gx.abs() < best_g.abs() {
            best_x = x;
            best_g = gx;
        }
        prev_x = x;
        prev_g = gx;
    }

    if best_g.abs() <= config.residual_tol {
        return Ok(RootResult {
            root: best_x,
            bracket_lo: best_x,
            bracket_hi: best_x,
            residual: best_g,
            iterations: 0,
            tangency: true,
        });
    }
    Err(Error::NoRootFound(format!(
        "no sign change on {} grid points in [{}, {}]",
        config.grid_points, config.lo_cap, config.hi_cap
    )))
}

fn bisect<F>(eval: &mut F, mut lo: f64, mut hi: f64, mut g_lo: f64, x_tol: f64) -> Result<RootResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut iterations = 0;
    while hi - lo > x_tol && iterations < MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        let g_mid = eval(mid)?;
        if g_mid == 0.0 {
            return Ok(RootResult {
                root: mid,
                bracket_lo: lo,
                bracket_hi: hi,
                residual: 0.0,
                iterations,
                tangency: false,
            });
        }
        if g_mid.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    let residual = eval(root)?;
    Ok(RootResult { root, bracket_lo: lo, bracket_hi: hi, residual, iterations, tangency: false })
}
