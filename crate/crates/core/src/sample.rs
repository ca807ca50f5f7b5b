//! Uniformly sampled real functions on an interval: the universal 1-D signal
//! carrier for profiles and kernels.

use crate::error::{Error, Result};

/// Real samples at the `n` uniform nodes `lo + i*h`, `h = (hi-lo)/(n-1)`.
/// No implicit periodicity is assumed anywhere.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledLine {
    lo: f64,
    hi: f64,
    values: Vec<f64>,
}

impl SampledLine {
    pub fn new(lo: f64, hi: f64, values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "sampled line needs n >= 2 nodes, got {}",
                values.len()
            )));
        }
        if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidInput(format!(
                "sampled line needs a finite interval with hi > lo, got [{lo}, {hi}]"
            )));
        }
        Ok(SampledLine { lo, hi, values })
    }

    /// Sample a closure at `n` uniform nodes on `[lo, hi]`.
    pub fn from_fn(lo: f64, hi: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("need n >= 2, got {n}")));
        }
        let h = (hi - lo) / (n as f64 - 1.0);
        let values = (0..n).map(|i| f(lo + i as f64 * h)).collect();
        SampledLine::new(lo, hi, values)
    }

    pub fn zeros(lo: f64, hi: f64, n: usize) -> Result<Self> {
        SampledLine::from_fn(lo, hi, n, |_| 0.0)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 2 by construction
    }

    pub fn spacing(&self) -> f64 {
        (self.hi - self.lo) / (self.values.len() as f64 - 1.0)
    }

    pub fn node(&self, i: usize) -> f64 {
        self.lo + i as f64 * self.spacing()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.spacing();
        (0..self.len()).map(move |i| self.lo + i as f64 * h)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Replace the values, keeping the grid.
    pub fn with_values(&self, values: Vec<f64>) -> Result<Self> {
        if values.len() != self.len() {
            return Err(Error::InvalidInput(format!(
                "value count {} does not match grid size {}",
                values.len(),
                self.len()
            )));
        }
        SampledLine::new(self.lo, self.hi, values)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// L2 norm over the line by the composite Simpson rule (trapezoid fallback
    /// on the last cell when n is even).
    pub fn l2_norm_sq(&self) -> f64 {
        integrate_uniform(self.spacing(), &self.values.iter().map(|v| v * v).collect::<Vec<_>>())
    }

    /// Integral of the samples over the window, composite Simpson.
    pub fn integral(&self) -> f64 {
        integrate_uniform(self.spacing(), &self.values)
    }

    /// Value at an arbitrary point by local polynomial interpolation
    /// (8-point Lagrange stencil, clamped at the ends). Points outside the
    /// window evaluate to zero: lines carry compactly supported signals.
    pub fn eval(&self, x: f64) -> f64 {
        let h = self.spacing();
        if x < self.lo - 0.5 * h || x > self.hi + 0.5 * h {
            return 0.0;
        }
        let n = self.len();
        let t = (x - self.lo) / h;
        let order = 8usize.min(n);
        let i0 = ((t.floor() as isize) - (order as isize / 2 - 1))
            .clamp(0, (n - order) as isize) as usize;
        // Lagrange interpolation on nodes i0..i0+order
        let mut acc = 0.0;
        for j in 0..order {
            let xj = i0 as f64 + j as f64;
            let mut lj = 1.0;
            for k in 0..order {
                if k != j {
                    let xk = i0 as f64 + k as f64;
                    lj *= (t - xk) / (xj - xk);
                }
            }
            acc += lj * self.values[i0 + j];
        }
        acc
    }

    /// Smallest interval `[s_minus, s_plus]` outside which |values| stays below
    /// `floor * peak`. Returns `None` for an all-zero signal.
    pub fn support(&self, floor: f64) -> Option<(f64, f64)> {
        let peak = self.max_abs();
        if peak == 0.0 {
            return None;
        }
        let thr = floor * peak;
        let first = self.values.iter().position(|v| v.abs() > thr)?;
        let last = self.values.iter().rposition(|v| v.abs() > thr)?;
        Some((self.node(first), self.node(last)))
    }

    /// Mass sitting at the two boundary nodes relative to the peak; used by
    /// operators whose contract assumes decay at the window ends.
    pub fn boundary_fraction(&self) -> f64 {
        let peak = self.max_abs();
        if peak == 0.0 {
            return 0.0;
        }
        let n = self.len();
        let edge = self.values[0].abs().max(self.values[n - 1].abs());
        edge / peak
    }
}

/// Composite Simpson on uniform samples; falls back to a trapezoid on the last
/// cell when the cell count is odd.
pub fn integrate_uniform(h: f64, v: &[f64]) -> f64 {
    let n = v.len();
    if n < 2 {
        return 0.0;
    }
    let cells = n - 1;
    let simpson_cells = cells - (cells % 2);
    let mut acc = 0.0;
    let mut i = 0;
    while i + 2 <= simpson_cells {
        acc += h / 3.0 * (v[i] + 4.0 * v[i + 1] + v[i + 2]);
        i += 2;
    }
    if cells % 2 == 1 {
        acc += h / 2.0 * (v[n - 2] + v[n - 1]);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rejects_degenerate_grids() {
        assert!(SampledLine::new(0.0, 1.0, vec![1.0]).is_err());
        assert!(SampledLine::new(1.0, 1.0, vec![0.0, 0.0]).is_err());
        assert!(SampledLine::new(2.0, 1.0, vec![0.0, 0.0]).is_err());
    }

    #[test]
    fn nodes_are_exact() {
        let f = SampledLine::from_fn(-1.0, 1.0, 5, |x| x).unwrap();
        assert_eq!(f.node(0), -1.0);
        assert_eq!(f.node(4), 1.0);
        assert_relative_eq!(f.spacing(), 0.5);
    }

    #[test]
    fn simpson_integrates_cubics_exactly() {
        let f = SampledLine::from_fn(0.0, 2.0, 201, |x| x * x * x - x).unwrap();
        assert_relative_eq!(f.integral(), 2.0, max_relative = 1e-12);
    }

    #[test]
    fn interpolation_hits_smooth_values() {
        let f = SampledLine::from_fn(-3.0, 3.0, 601, |x| (-x * x).exp()).unwrap();
        for &x in &[-2.517, -0.113, 0.0, 1.99911, 2.71] {
            assert_relative_eq!(f.eval(x), (-x * x).exp(), epsilon = 1e-10);
        }
        assert_eq!(f.eval(5.0), 0.0);
    }

    #[test]
    fn support_detection() {
        let f = SampledLine::from_fn(-5.0, 5.0, 1001, |x| {
            if x.abs() < 1.0 {
                (1.0 - x * x).powi(4)
            } else {
                0.0
            }
        })
        .unwrap();
        let (a, b) = f.support(1e-10).unwrap();
        assert!(a >= -1.01 && a <= -0.9);
        assert!(b <= 1.01 && b >= 0.9);
        let z = SampledLine::zeros(0.0, 1.0, 8).unwrap();
        assert!(z.support(1e-10).is_none());
    }
}
