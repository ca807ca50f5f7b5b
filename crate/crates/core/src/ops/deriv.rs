//! Spectral differentiation on padded uniform grids.

use crate::error::{Error, Result};
use crate::ops::fft::{require_decay, Padded, DEFAULT_PAD};
use crate::sample::SampledLine;
use rustfft::num_complex::Complex64;
use std::f64::consts::PI;

pub const MAX_ORDER: usize = 12;

/// k-th derivative by the FFT multiplier (2 pi i xi)^k on the padded grid.
/// The input should be sampled finely enough that the k-th derivative is
/// band-limited on the grid.
pub fn derivative(f: &SampledLine, order: usize) -> Result<SampledLine> {
    if order == 0 {
        return Ok(f.clone());
    }
    if order > MAX_ORDER {
        return Err(Error::Order(format!(
            "derivative order {order} exceeds the configured maximum {MAX_ORDER}"
        )));
    }
    require_decay(f, "derivative")?;
    let mut p = Padded::embed(f, DEFAULT_PAD);
    p.taper();
    p.apply_symbol(|xi| Complex64::new(0.0, 2.0 * PI * xi).powu(order as u32));
    p.extract(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn constant_window_derivative_vanishes_inside() {
        // windowed constant: derivative is zero away from the window roll-off
        let f = SampledLine::from_fn(-20.0, 20.0, 4001, |x| {
            ((-x * x / 32.0).exp()).powi(2)
        })
        .unwrap();
        let d = derivative(&f, 1).unwrap();
        // compare against the analytic derivative of the sampled function
        for (x, &v) in d.nodes().zip(d.values()) {
            if x.abs() < 10.0 {
                let exact = (-x / 8.0) * (-x * x / 16.0).exp();
                assert_relative_eq!(v, exact, epsilon = 1e-8);
            }
        }
    }

    #[test]
    fn windowed_sine_first_derivative() {
        let window = |x: f64| (-(x / 10.0).powi(2) * 4.0).exp();
        let f = SampledLine::from_fn(-25.0, 25.0, 8001, |x| x.sin() * window(x)).unwrap();
        let d = derivative(&f, 1).unwrap();
        let mut sup = 0.0f64;
        for (x, &v) in d.nodes().zip(d.values()) {
            if x.abs() <= 3.0 {
                let exact = x.cos() * window(x) + x.sin() * window(x) * (-8.0 * x / 100.0);
                sup = sup.max((v - exact).abs());
            }
        }
        assert!(sup < 1e-6, "sup interior error {sup}");
    }

    #[test]
    fn high_order_matches_gaussian() {
        let f = SampledLine::from_fn(-18.0, 18.0, 4097, |x| (-(x * x) / 2.0).exp()).unwrap();
        let d4 = derivative(&f, 4).unwrap();
        for &x in &[-1.3, 0.0, 0.9] {
            // d^4/dx^4 e^{-x^2/2} = (x^4 - 6 x^2 + 3) e^{-x^2/2}
            let exact = (x.powi(4) - 6.0 * x * x + 3.0) * (-(x * x) / 2.0).exp();
            assert_relative_eq!(d4.eval(x), exact, epsilon = 1e-7);
        }
    }

    #[test]
    fn order_cap() {
        let f = SampledLine::zeros(-1.0, 1.0, 64).unwrap();
        assert!(matches!(derivative(&f, 13), Err(Error::Order(_))));
    }
}
