//! Moduli of Taylor coefficients, finite or with a geometric tail.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Describes the coefficients that are not stored explicitly.
///
/// For `k >= moduli.len()` the modulus of the coefficient of `z^(m+k)` is at
/// most `constant * ratio^k`; with `exact` set it is equal to it, which lets
/// sums generate as many terms as they need.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeometricTail {
    pub ratio: f64,
    pub constant: f64,
    #[serde(default)]
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientSequence {
    /// Vanishing order: `moduli[0]` is `|a_m|`.
    pub m: u32,
    pub moduli: Vec<f64>,
    #[serde(default, rename = "tail", skip_serializing_if = "Option::is_none")]
    pub exact_tail: Option<GeometricTail>,
}

impl CoefficientSequence {
    pub fn new(m: u32, moduli: Vec<f64>) -> Result<Self> {
        let seq = Self { m, moduli, exact_tail: None };
        seq.validate()?;
        Ok(seq)
    }

    pub fn with_tail(mut self, tail: GeometricTail) -> Result<Self> {
        self.exact_tail = Some(tail);
        self.validate()?;
        Ok(self)
    }

    /// Coefficients of a polynomial or power series given from `z^0`.
    pub fn from_moduli(moduli: Vec<f64>) -> Result<Self> {
        Self::new(0, moduli)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(bad) = self.moduli.iter().find(|x| !(x.is_finite() && **x >= 0.0)) {
            return Err(Error::InvalidInput(format!("coefficient modulus {bad} is not a finite non-negative real")));
        }
        if let Some(t) = self.exact_tail {
            if !(t.ratio.is_finite() && (0.0..1.0).contains(&t.ratio)) {
                return Err(Error::InvalidInput(format!("tail ratio {} outside [0, 1)", t.ratio)));
            }
            if !(t.constant.is_finite() && t.constant >= 0.0) {
                return Err(Error::InvalidInput(format!("tail constant {} must be non-negative", t.constant)));
            }
        }
        Ok(())
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let seq: Self =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("coefficient file: {e}")))?;
        seq.validate()?;
        Ok(seq)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("coefficient sequences always serialize")
    }

    pub fn is_finite(&self) -> bool {
        self.exact_tail.is_none()
    }

    /// `|a_{m+k}|` when it is known exactly (stored or from an exact tail).
    pub fn modulus(&self, k: usize) -> Option<f64> {
        if let Some(&v) = self.moduli.get(k) {
            return Some(v);
        }
        match self.exact_tail {
            None => Some(0.0),
            Some(t) if t.exact => Some(t.constant * t.ratio.powi(k as i32)),
            Some(_) => None,
        }
    }

    /// `|a_n|` by absolute index, zero below the vanishing order.
    pub fn modulus_at(&self, n: u64) -> Option<f64> {
        if n < self.m as u64 {
            Some(0.0)
        } else {
            self.modulus((n - self.m as u64) as usize)
        }
    }

    /// Number of coefficients that can be generated exactly; `None` if unbounded.
    pub fn known_len(&self) -> Option<usize> {
        match self.exact_tail {
            Some(t) if t.exact => None,
            _ => Some(self.moduli.len()),
        }
    }

    /// Tail certificate for the coefficients beyond the stored ones, if it is only a bound.
    pub fn bound_tail(&self) -> Option<GeometricTail> {
        self.exact_tail.filter(|t| !t.exact)
    }

    /// An upper bound for `|a_{m+k}|` over all `k >= from`.
    pub fn sup_from(&self, from: usize) -> f64 {
        let stored = self.moduli.iter().skip(from).fold(0.0f64, |a, &b| a.max(b));
        let tail = match self.exact_tail {
            None => 0.0,
            Some(t) => t.constant * t.ratio.powi(from.max(self.moduli.len()) as i32),
        };
        stored.max(tail)
    }
}
