//! Shared FFT plumbing for the multiplier operators: zero-padding, edge
//! tapering, and application of a frequency symbol on the padded grid.

use crate::error::{Error, Result};
use crate::sample::SampledLine;
use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

/// Wrap-around from the nonlocal multipliers is the dominant error source, so
/// inputs are embedded in a window at least this many times larger.
pub const DEFAULT_PAD: usize = 4;

/// Fraction of the padded window tapered at each end (Kaiser roll-off).
const TAPER_FRACTION: f64 = 0.04;
const KAISER_BETA: f64 = 10.0;

fn bessel_i0(x: f64) -> f64 {
    // power series; x stays <= KAISER_BETA here
    let mut term = 1.0;
    let mut sum = 1.0;
    let q = x * x / 4.0;
    for k in 1..64 {
        term *= q / (k as f64 * k as f64);
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    sum
}

/// A signal embedded in a zero-padded window with the original node range
/// recorded, ready for multiplier application.
pub struct Padded {
    pub data: Vec<Complex64>,
    pub n_total: usize,
    /// index of the first original node inside the padded array
    pub offset: usize,
    pub lo: f64,
    pub h: f64,
    n_core: usize,
}

impl Padded {
    pub fn embed(f: &SampledLine, pad: usize) -> Padded {
        let n = f.len();
        let n_total = (pad.max(2) * n).next_power_of_two();
        let offset = (n_total - n) / 2;
        let mut data = vec![Complex64::new(0.0, 0.0); n_total];
        for (i, &v) in f.values().iter().enumerate() {
            data[offset + i] = Complex64::new(v, 0.0);
        }
        Padded {
            data,
            n_total,
            offset,
            lo: f.lo(),
            h: f.spacing(),
            n_core: n,
        }
    }

    /// Kaiser taper over the outer fraction of the *core* window; identity in
    /// the interior. Signals that already decay at the window ends are left
    /// essentially untouched.
    pub fn taper(&mut self) {
        let n = self.n_core;
        let m = ((n as f64) * TAPER_FRACTION).ceil() as usize;
        if m == 0 || 2 * m >= n {
            return;
        }
        let i0b = bessel_i0(KAISER_BETA);
        for k in 0..m {
            let t = k as f64 / m as f64; // 0 at window edge, 1 at interior
            let w = bessel_i0(KAISER_BETA * (1.0 - (1.0 - t) * (1.0 - t)).sqrt()) / i0b;
            self.data[self.offset + k] *= w;
            self.data[self.offset + n - 1 - k] *= w;
        }
    }

    /// Apply a frequency-domain symbol sigma(xi), xi in cycles per unit
    /// length, and transform back. The DC and Nyquist bins take the symbol's
    /// value at those frequencies (callers pass symbols already regularized
    /// there).
    pub fn apply_symbol(&mut self, symbol: impl Fn(f64) -> Complex64) {
        let n = self.n_total;
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(n);
        let inv = planner.plan_fft_inverse(n);
        fwd.process(&mut self.data);
        let df = 1.0 / (n as f64 * self.h);
        for (k, v) in self.data.iter_mut().enumerate() {
            let xi = if k <= n / 2 {
                k as f64 * df
            } else {
                (k as f64 - n as f64) * df
            };
            *v *= symbol(xi);
        }
        inv.process(&mut self.data);
        let scale = 1.0 / n as f64;
        for v in self.data.iter_mut() {
            *v *= scale;
        }
    }

    /// Extract the real part over the original node range.
    pub fn extract(&self, like: &SampledLine) -> Result<SampledLine> {
        let vals: Vec<f64> = (0..like.len())
            .map(|i| self.data[self.offset + i].re)
            .collect();
        like.with_values(vals)
    }
}

/// Decay-at-endpoints precondition shared by the nonlocal operators.
pub fn require_decay(f: &SampledLine, what: &str) -> Result<()> {
    let frac = f.boundary_fraction();
    if frac > 1e-2 {
        return Err(Error::Decay(format!(
            "{what}: boundary mass {frac:.3e} of peak; widen the window or taper the input"
        )));
    }
    Ok(())
}
