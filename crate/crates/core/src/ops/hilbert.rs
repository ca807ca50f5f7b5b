//! Hilbert transform on the line.
//!
//! Convention: Hf(x) = (1/pi) p.v. integral f(tau)/(x - tau) dtau, i.e. the
//! Fourier multiplier -i sgn(xi). This is the convention under which the
//! transform of sqrt(1-x^2) restricted to [-1,1] equals s on (-1,1); some of
//! the literature uses the opposite sign.

use crate::error::Result;
use crate::ops::fft::{require_decay, Padded, DEFAULT_PAD};
use crate::sample::SampledLine;
use rustfft::num_complex::Complex64;

/// FFT Hilbert transform on the signal's own grid; the input must decay at
/// both window ends (zero-padding assumption). H is an L2 isometry and
/// H(Hf) = -f.
pub fn hilbert(f: &SampledLine) -> Result<SampledLine> {
    hilbert_padded(f, DEFAULT_PAD)
}

/// Hilbert transform with an explicit padding factor (>= 4 recommended; the
/// multiplier is nonlocal and wrap-around dominates the error).
pub fn hilbert_padded(f: &SampledLine, pad: usize) -> Result<SampledLine> {
    require_decay(f, "hilbert")?;
    let mut p = Padded::embed(f, pad);
    p.taper();
    p.apply_symbol(|xi| {
        if xi == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(0.0, -xi.signum())
        }
    });
    p.extract(f)
}

/// Dense principal-value quadrature of the Hilbert transform with singularity
/// subtraction:
///   Hf(x) = (1/pi) [ integral (f(tau) - f(x))/(x - tau) dtau
///                    + f(x) ln((x - lo)/(hi - x)) ].
/// Slow and independent of the FFT path; used as an oracle.
pub fn hilbert_pv_quadrature(f: &SampledLine, x: f64) -> f64 {
    let h = f.spacing();
    let lo = f.lo();
    let hi = f.hi();
    let fx = f.eval(x);
    let mut acc = 0.0;
    for (t, &v) in f.nodes().zip(f.values()) {
        let d = x - t;
        if d.abs() < 0.5 * h {
            // removable point: integrand tends to -f'(x); midpoint value via
            // neighbours
            let fp = (f.eval(t + h) - f.eval(t - h)) / (2.0 * h);
            acc += -fp;
        } else {
            acc += (v - fx) / d;
        }
    }
    let mut out = acc * h;
    if x > lo && x < hi {
        out += fx * ((x - lo) / (hi - x)).ln();
    }
    out / std::f64::consts::PI
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn zero_maps_to_zero() {
        let f = SampledLine::zeros(-10.0, 10.0, 256).unwrap();
        let g = hilbert(&f).unwrap();
        assert_eq!(g.max_abs(), 0.0);
    }

    #[test]
    fn lorentzian_closed_form() {
        // H[1/(1+x^2)] = x/(1+x^2); the kernel tail demands a wide window
        let f = SampledLine::from_fn(-2000.0, 2000.0, 40001, |x| 1.0 / (1.0 + x * x)).unwrap();
        let g = hilbert(&f).unwrap();
        let h = g.spacing();
        let mut sup = 0.0f64;
        for (x, &v) in g.nodes().zip(g.values()) {
            if x.abs() <= 5.0 {
                sup = sup.max((v - x / (1.0 + x * x)).abs());
            }
        }
        assert!(sup < 1e-6, "sup error {sup} (h = {h})");
    }

    #[test]
    fn semicircle_gives_identity_inside() {
        // H[sqrt(1-x^2) 1_{|x|<=1}](s) = s on (-1,1)
        let f = SampledLine::from_fn(-80.0, 80.0, 32001, |x| {
            if x.abs() < 1.0 {
                (1.0 - x * x).sqrt()
            } else {
                0.0
            }
        })
        .unwrap();
        let g = hilbert(&f).unwrap();
        for (x, &v) in g.nodes().zip(g.values()) {
            if x.abs() <= 0.9 {
                assert_relative_eq!(v, x, epsilon = 2e-3);
            }
        }
    }

    #[test]
    fn involution_and_isometry() {
        let f = SampledLine::from_fn(-40.0, 40.0, 8192, |x| {
            (-(x * x) / 2.0).exp() * (3.0 * x).cos()
        })
        .unwrap();
        let hf = hilbert(&f).unwrap();
        assert_relative_eq!(
            hf.l2_norm_sq(),
            f.l2_norm_sq(),
            max_relative = 1e-6
        );
        let hhf = hilbert(&hf).unwrap();
        let mut err = 0.0f64;
        for (a, b) in hhf.values().iter().zip(f.values()) {
            err = err.max((a + b).abs());
        }
        assert!(err < 1e-6 * f.max_abs(), "H^2 deviates from -I by {err}");
    }

    #[test]
    fn pv_quadrature_agrees_with_fft() {
        let f = SampledLine::from_fn(-60.0, 60.0, 12001, |x| (-(x * x)).exp()).unwrap();
        let g = hilbert(&f).unwrap();
        for &x in &[-1.5, -0.4, 0.0, 0.7, 2.1] {
            let pv = hilbert_pv_quadrature(&f, x);
            assert_relative_eq!(g.eval(x), pv, epsilon = 1e-6);
        }
    }

    #[test]
    fn insufficient_decay_is_an_error() {
        let f = SampledLine::from_fn(-5.0, 5.0, 501, |x| 1.0 / (1.0 + x * x)).unwrap();
        assert!(hilbert(&f).is_err());
    }
}
