//! Radial position/velocity data of a free wave sampled on a panel grid.

use crate::dim::DimensionContext;
use crate::error::{Error, Result};
use crate::quadrature::PanelGrid;

/// Region selector for energy queries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    All,
    /// Exterior {r > cut}; the cut is resolved as a node-level partition so
    /// that All = Exterior(0) and interior/exterior complements share weights.
    Exterior(f64),
}

/// Declared behaviour of the data at the outer grid boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tail {
    /// Values fall below the numeric floor before the boundary.
    Compact,
    /// Algebraic tail r^{p}; the grid may end while values are still nonzero.
    PowerLaw { exponent: i32 },
}

/// A pair (u0, u1) on a radial quadrature grid over (0, L], with weights for
/// integrals against r^{d-1} dr.
#[derive(Debug, Clone)]
pub struct RadialField {
    ctx: DimensionContext,
    grid: PanelGrid,
    u0: Vec<f64>,
    u1: Vec<f64>,
    tail: Tail,
}

impl RadialField {
    pub fn new(
        ctx: DimensionContext,
        grid: PanelGrid,
        u0: Vec<f64>,
        u1: Vec<f64>,
        tail: Tail,
    ) -> Result<Self> {
        if u0.len() != grid.len() || u1.len() != grid.len() {
            return Err(Error::InvalidInput(format!(
                "field arrays ({}, {}) do not match grid size {}",
                u0.len(),
                u1.len(),
                grid.len()
            )));
        }
        let field = RadialField {
            ctx,
            grid,
            u0,
            u1,
            tail,
        };
        if matches!(tail, Tail::Compact) {
            let peak = field.peak();
            if peak > 0.0 {
                let n = field.grid.len();
                let edge = field.u0[n - 1].abs().max(field.u1[n - 1].abs());
                if edge > 1e-6 * peak {
                    return Err(Error::Decay(format!(
                        "compact-support field carries {:.3e} of its peak at the outer boundary",
                        edge / peak
                    )));
                }
            }
        }
        Ok(field)
    }

    pub fn from_fns(
        ctx: DimensionContext,
        grid: PanelGrid,
        u0: impl Fn(f64) -> f64,
        u1: impl Fn(f64) -> f64,
        tail: Tail,
    ) -> Result<Self> {
        let v0 = grid.nodes().iter().map(|&r| u0(r)).collect();
        let v1 = grid.nodes().iter().map(|&r| u1(r)).collect();
        RadialField::new(ctx, grid, v0, v1, tail)
    }

    pub fn zero(ctx: DimensionContext, grid: PanelGrid) -> Self {
        let n = grid.len();
        RadialField {
            ctx,
            grid,
            u0: vec![0.0; n],
            u1: vec![0.0; n],
            tail: Tail::Compact,
        }
    }

    pub fn ctx(&self) -> &DimensionContext {
        &self.ctx
    }

    pub fn grid(&self) -> &PanelGrid {
        &self.grid
    }

    pub fn u0(&self) -> &[f64] {
        &self.u0
    }

    pub fn u1(&self) -> &[f64] {
        &self.u1
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn peak(&self) -> f64 {
        self.u0
            .iter()
            .chain(&self.u1)
            .fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Radius outside which both arrays stay below `floor * peak`.
    pub fn support_radius(&self, floor: f64) -> f64 {
        let peak = self.peak();
        if peak == 0.0 {
            return 0.0;
        }
        let thr = floor * peak;
        for i in (0..self.grid.len()).rev() {
            if self.u0[i].abs() > thr || self.u1[i].abs() > thr {
                return self.grid.nodes()[i];
            }
        }
        0.0
    }

    /// Energy sigma_{d-1} * integral over the region of
    /// (|d_r u0|^2 + |u1|^2) r^{d-1} dr, with d_r u0 by per-panel spectral
    /// differentiation.
    pub fn energy(&self, region: Region) -> Result<f64> {
        let start = match region {
            Region::All => 0,
            Region::Exterior(cut) => {
                if cut < 0.0 || cut > self.grid.l() {
                    return Err(Error::OutOfDomain(format!(
                        "exterior cut {cut} outside grid [0, {}]",
                        self.grid.l()
                    )));
                }
                self.grid.first_node_above(cut)
            }
        };
        let du0 = self.grid.differentiate(&self.u0)?;
        let p = self.ctx.d() as i32 - 1;
        let nodes = self.grid.nodes();
        let weights = self.grid.weights();
        let mut acc = 0.0;
        for i in start..nodes.len() {
            acc += weights[i] * nodes[i].powi(p) * (du0[i] * du0[i] + self.u1[i] * self.u1[i]);
        }
        Ok(self.ctx.sigma_dm1() * acc)
    }

    /// L2(r^{d-1} dr) norm squared of one component over {r > cut}, times
    /// sigma_{d-1}.
    pub fn l2_component_sq(&self, velocity: bool, cut: f64) -> f64 {
        let start = self.grid.first_node_above(cut);
        let v = if velocity { &self.u1 } else { &self.u0 };
        let p = self.ctx.d() as i32 - 1;
        let nodes = self.grid.nodes();
        let weights = self.grid.weights();
        let acc: f64 = (start..nodes.len())
            .map(|i| weights[i] * nodes[i].powi(p) * v[i] * v[i])
            .sum();
        self.ctx.sigma_dm1() * acc
    }
}
