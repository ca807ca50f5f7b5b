//! Spatial dimension and the constants derived from it.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// Dimension `d >= 2` together with every derived constant the formulas need:
/// `mu = (d-1)/2`, the propagation constant `c_d` and the sphere areas
/// `sigma_{d-1}`, `sigma_{d-2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionContext {
    d: usize,
    mu_num: usize, // mu = mu_num / 2
    parity: Parity,
    c_d: f64,
    sigma_dm1: f64,
    sigma_dm2: f64,
}

/// Area of the unit sphere S^n embedded in R^{n+1}: 2 pi^{(n+1)/2} / Gamma((n+1)/2).
pub fn sphere_area(n: usize) -> f64 {
    let half = (n as f64 + 1.0) / 2.0;
    2.0 * PI.powf(half) / gamma(half)
}

/// Gamma function for positive arguments that are multiples of 1/2, computed
/// exactly by the recurrence from Gamma(1/2) = sqrt(pi) or Gamma(1) = 1.
/// This covers every argument the dimension constants use.
pub fn gamma(x: f64) -> f64 {
    let twice = (2.0 * x).round();
    assert!(
        (2.0 * x - twice).abs() < 1e-12 && twice >= 1.0,
        "gamma: expected positive half-integer argument, got {x}"
    );
    let twice = twice as u64;
    let mut acc = if twice % 2 == 0 { 1.0 } else { PI.sqrt() };
    let mut k = if twice % 2 == 0 { 2 } else { 1 };
    while k + 2 <= twice {
        acc *= k as f64 / 2.0;
        k += 2;
    }
    acc
}

impl DimensionContext {
    pub fn new(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::Dimension(format!("d = {d}, need d >= 2")));
        }
        let parity = if d % 2 == 0 { Parity::Even } else { Parity::Odd };
        let c_d = match parity {
            // quoted in the propagation formulas: 1/(2 (2 pi)^{(d-1)/2}) for odd d,
            // (2 pi)^{-d/2} for even d
            Parity::Odd => 0.5 / (2.0 * PI).powf((d as f64 - 1.0) / 2.0),
            Parity::Even => (2.0 * PI).powf(-(d as f64) / 2.0),
        };
        Ok(DimensionContext {
            d,
            mu_num: d - 1,
            parity,
            c_d,
            sigma_dm1: sphere_area(d - 1),
            sigma_dm2: sphere_area(d - 2),
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// mu = (d-1)/2 as a float (half-integer for even d).
    pub fn mu(&self) -> f64 {
        self.mu_num as f64 / 2.0
    }

    /// mu as an exact integer; only valid in odd dimension.
    pub fn mu_int(&self) -> Result<usize> {
        match self.parity {
            Parity::Odd => Ok(self.mu_num / 2),
            Parity::Even => Err(Error::Dimension(format!(
                "mu = {}/2 is not an integer for d = {}",
                self.mu_num, self.d
            ))),
        }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_even(&self) -> bool {
        self.parity == Parity::Even
    }

    pub fn c_d(&self) -> f64 {
        self.c_d
    }

    /// Area of S^{d-1}.
    pub fn sigma_dm1(&self) -> f64 {
        self.sigma_dm1
    }

    /// Area of S^{d-2}.
    pub fn sigma_dm2(&self) -> f64 {
        self.sigma_dm2
    }

    /// Hankel kernel order nu = (d-2)/2.
    pub fn bessel_order(&self) -> f64 {
        (self.d as f64 - 2.0) / 2.0
    }
}
