//! Radiation profiles: the 1-D signals G(s) capturing the asymptotics of
//! r^{(d-1)/2} d_t u along outgoing or incoming light cones.

use crate::dim::DimensionContext;
use crate::error::{Error, Result};
use crate::sample::SampledLine;

/// Which asymptotic limit the profile represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Minus,
    Plus,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Minus => Direction::Plus,
            Direction::Plus => Direction::Minus,
        }
    }
}

/// Default numeric floor for support declarations: profiles are reconstructed
/// with ~1e-3..1e-6 accuracy, so a hard zero is unattainable.
pub const SUPPORT_FLOOR: f64 = 1e-10;

/// A radiation profile G(s) with recorded support bounds and dimension context.
#[derive(Debug, Clone)]
pub struct RadialProfile {
    ctx: DimensionContext,
    line: SampledLine,
    support: (f64, f64),
    direction: Direction,
}

impl RadialProfile {
    /// Wrap a sampled signal, validating that it really is negligible outside
    /// the declared support (floor = SUPPORT_FLOOR of the peak).
    pub fn new(
        ctx: DimensionContext,
        line: SampledLine,
        support: (f64, f64),
        direction: Direction,
    ) -> Result<Self> {
        if support.0 > support.1 {
            return Err(Error::InvalidInput(format!(
                "support interval [{}, {}] is empty",
                support.0, support.1
            )));
        }
        let peak = line.max_abs();
        if peak > 0.0 {
            let thr = SUPPORT_FLOOR * peak;
            for (s, v) in line.nodes().zip(line.values()) {
                if (s < support.0 || s > support.1) && v.abs() > thr {
                    return Err(Error::Decay(format!(
                        "profile carries {:.3e} of its peak at s = {s}, outside declared support [{}, {}]",
                        v.abs() / peak,
                        support.0,
                        support.1
                    )));
                }
            }
        }
        Ok(RadialProfile {
            ctx,
            line,
            support,
            direction,
        })
    }

    /// Wrap a sampled signal, measuring the support from the values.
    pub fn from_line(ctx: DimensionContext, line: SampledLine, direction: Direction) -> Self {
        let support = line
            .support(SUPPORT_FLOOR)
            .unwrap_or((0.0, 0.0));
        RadialProfile {
            ctx,
            line,
            support,
            direction,
        }
    }

    pub fn zero(ctx: DimensionContext, lo: f64, hi: f64, n: usize) -> Result<Self> {
        Ok(RadialProfile {
            ctx,
            line: SampledLine::zeros(lo, hi, n)?,
            support: (0.0, 0.0),
            direction: Direction::Minus,
        })
    }

    pub fn ctx(&self) -> &DimensionContext {
        &self.ctx
    }

    pub fn line(&self) -> &SampledLine {
        &self.line
    }

    pub fn support(&self) -> (f64, f64) {
        self.support
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// sigma_{d-1} * integral |G|^2 ds over the line (the radial
    /// specialization of the profile norm over R x S^{d-1}).
    pub fn l2_sq(&self) -> f64 {
        self.ctx.sigma_dm1() * self.line.l2_norm_sq()
    }

    /// Same norm restricted to {|s| > cut}.
    pub fn l2_sq_outside(&self, cut: f64) -> f64 {
        let h = self.line.spacing();
        let restricted: Vec<f64> = self
            .line
            .nodes()
            .zip(self.line.values())
            .map(|(s, &v)| if s.abs() > cut { v * v } else { 0.0 })
            .collect();
        self.ctx.sigma_dm1() * crate::sample::integrate_uniform(h, &restricted)
    }

    /// Same norm restricted to {s > cut}.
    pub fn l2_sq_above(&self, cut: f64) -> f64 {
        let h = self.line.spacing();
        let restricted: Vec<f64> = self
            .line
            .nodes()
            .zip(self.line.values())
            .map(|(s, &v)| if s > cut { v * v } else { 0.0 })
            .collect();
        self.ctx.sigma_dm1() * crate::sample::integrate_uniform(h, &restricted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn indicator_profile_norm_d3() {
        let ctx = DimensionContext::new(3).unwrap();
        let line = SampledLine::from_fn(-2.0, 2.0, 4001, |s| {
            if s > 0.0 && s < 1.0 {
                1.0
            } else {
                0.0
            }
        })
        .unwrap();
        let g = RadialProfile::from_line(ctx, line, Direction::Minus);
        assert_relative_eq!(g.l2_sq(), 4.0 * PI, max_relative = 1e-3);
    }

    #[test]
    fn zero_profile() {
        let ctx = DimensionContext::new(4).unwrap();
        let g = RadialProfile::zero(ctx, -1.0, 1.0, 64).unwrap();
        assert_eq!(g.l2_sq(), 0.0);
    }

    #[test]
    fn support_declaration_enforced() {
        let ctx = DimensionContext::new(3).unwrap();
        let line = SampledLine::from_fn(-2.0, 2.0, 801, |s| (-(s * s) / 0.02).exp()).unwrap();
        // declared support misses the bump
        assert!(RadialProfile::new(ctx, line.clone(), (1.0, 2.0), Direction::Minus).is_err());
        assert!(RadialProfile::new(ctx, line, (-2.0, 2.0), Direction::Minus).is_ok());
    }

    #[test]
    fn restricted_norms() {
        let ctx = DimensionContext::new(2).unwrap();
        let line = SampledLine::from_fn(-3.0, 3.0, 6001, |s| {
            if s.abs() < 2.0 {
                1.0
            } else {
                0.0
            }
        })
        .unwrap();
        let g = RadialProfile::from_line(ctx, line, Direction::Minus);
        assert_relative_eq!(
            g.l2_sq_outside(1.0),
            g.ctx().sigma_dm1() * 2.0,
            max_relative = 1e-2
        );
        assert_relative_eq!(
            g.l2_sq_above(1.0),
            g.ctx().sigma_dm1(),
            max_relative = 1e-2
        );
    }
}
