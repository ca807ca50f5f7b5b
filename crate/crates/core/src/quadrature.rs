//! Gaussian quadrature rules and composite radial panel grids.
//!
//! Nodes and weights come from the Golub-Welsch algorithm (symmetric
//! tridiagonal Jacobi matrix, eigen-decomposition). Chebyshev rules use their
//! closed forms. Radial grids are composite Gauss-Legendre panels so that
//! r^{d-1}-weighted integrals of smooth integrands converge spectrally.

use crate::dim::gamma;
use crate::error::{Error, Result};
use nalgebra::DMatrix;

/// A quadrature rule on the reference interval [-1, 1].
#[derive(Debug, Clone)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule {
    /// Gauss-Legendre: integrates f exactly for polynomials of degree 2n-1.
    pub fn gauss_legendre(n: usize) -> Result<Rule> {
        Rule::gauss_jacobi(n, 0.0, 0.0)
    }

    /// Gauss-Jacobi with weight (1-x)^alpha (1+x)^beta.
    pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> Result<Rule> {
        if n < 1 {
            return Err(Error::InvalidInput("quadrature degree must be >= 1".into()));
        }
        if alpha <= -1.0 || beta <= -1.0 {
            return Err(Error::InvalidInput(format!(
                "Jacobi exponents must exceed -1, got alpha={alpha}, beta={beta}"
            )));
        }
        if n == 1 {
            let node = (beta - alpha) / (alpha + beta + 2.0);
            return Ok(Rule {
                nodes: vec![node],
                weights: vec![jacobi_mass(alpha, beta)],
            });
        }
        let mut m = DMatrix::<f64>::zeros(n, n);
        let mut diag = (beta - alpha) / (2.0 + alpha + beta);
        for i in 0..n - 1 {
            let k = i as f64 + 1.0;
            let denom = 2.0 * k + alpha + beta;
            let off = 2.0 / denom
                * (k * (k + alpha) * (k + beta) * (k + alpha + beta)
                    / ((denom + 1.0) * (denom - 1.0)))
                    .sqrt();
            m[(i, i)] = diag;
            m[(i, i + 1)] = off;
            m[(i + 1, i)] = off;
            diag = (beta * beta - alpha * alpha) / (denom * (denom + 2.0));
        }
        m[(n - 1, n - 1)] = diag;
        let eig = m.symmetric_eigen();
        let mass = jacobi_mass(alpha, beta);
        let mut pairs: Vec<(f64, f64)> = eig
            .eigenvalues
            .iter()
            .copied()
            .zip(eig.eigenvectors.row(0).iter().map(|v| v * v * mass))
            .collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        // symmetric rules: pin the central node of odd-degree rules to 0
        if alpha == beta && n % 2 == 1 {
            pairs[n / 2].0 = 0.0;
        }
        let (nodes, weights) = pairs.into_iter().unzip();
        Ok(Rule { nodes, weights })
    }

    /// Gauss-Chebyshev (first kind): weight (1-x^2)^{-1/2}, closed form.
    pub fn gauss_chebyshev(n: usize) -> Result<Rule> {
        if n < 1 {
            return Err(Error::InvalidInput("quadrature degree must be >= 1".into()));
        }
        let w = std::f64::consts::PI / n as f64;
        let nodes = (1..=n)
            .map(|k| ((2.0 * k as f64 - 1.0) / (2.0 * n as f64) * std::f64::consts::PI).cos())
            .collect();
        Ok(Rule {
            nodes,
            weights: vec![w; n],
        })
    }

    /// Integrate a closure against this rule mapped onto [a, b]; the weight
    /// function (if any) is taken on the reference interval.
    pub fn integrate(&self, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

/// Total mass of the Jacobi weight on [-1,1]:
/// 2^{alpha+beta+1} B(alpha+1, beta+1).
fn jacobi_mass(alpha: f64, beta: f64) -> f64 {
    2f64.powf(alpha + beta + 1.0) * gamma(alpha + 1.0) * gamma(beta + 1.0)
        / gamma(alpha + beta + 2.0)
}

/// Composite Gauss-Legendre panel grid on [0, L].
///
/// All nodes are strictly inside their panels, so grids on (0, L] never touch
/// r = 0. Panel boundaries can be forced through given break points so that
/// piecewise-defined data integrate exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelGrid {
    breaks: Vec<f64>,   // panel boundaries, ascending, breaks[0] = 0
    ppp: usize,         // points per panel
    nodes: Vec<f64>,    // all nodes, ascending
    weights: Vec<f64>,  // plain quadrature weights (no r^{d-1} factor)
}

impl PanelGrid {
    /// Uniform panels of width ~`panel_width` covering [0, L], `ppp` Gauss
    /// points per panel, forcing panel breaks at `forced` points.
    pub fn new(l: f64, panel_width: f64, ppp: usize, forced: &[f64]) -> Result<Self> {
        if !(l > 0.0) || !(panel_width > 0.0) {
            return Err(Error::InvalidInput(format!(
                "panel grid needs L > 0 and panel width > 0, got L={l}, width={panel_width}"
            )));
        }
        if ppp < 2 {
            return Err(Error::InvalidInput("need at least 2 points per panel".into()));
        }
        let mut breaks = vec![0.0];
        for &f in forced {
            if f > 0.0 && f < l {
                breaks.push(f);
            }
        }
        breaks.push(l);
        breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
        breaks.dedup_by(|a, b| (*a - *b).abs() < 1e-12 * l);
        // subdivide each forced segment into panels of at most panel_width
        let mut all = vec![breaks[0]];
        for w in breaks.windows(2) {
            let (a, b) = (w[0], w[1]);
            let k = ((b - a) / panel_width).ceil().max(1.0) as usize;
            for i in 1..=k {
                all.push(a + (b - a) * i as f64 / k as f64);
            }
        }
        let rule = Rule::gauss_legendre(ppp)?;
        let mut nodes = Vec::with_capacity(ppp * (all.len() - 1));
        let mut weights = Vec::with_capacity(ppp * (all.len() - 1));
        for w in all.windows(2) {
            let half = 0.5 * (w[1] - w[0]);
            let mid = 0.5 * (w[1] + w[0]);
            for (x, wt) in rule.nodes.iter().zip(&rule.weights) {
                nodes.push(mid + half * x);
                weights.push(wt * half);
            }
        }
        Ok(PanelGrid {
            breaks: all,
            ppp,
            nodes,
            weights,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn l(&self) -> f64 {
        *self.breaks.last().unwrap()
    }

    pub fn points_per_panel(&self) -> usize {
        self.ppp
    }

    pub fn panels(&self) -> usize {
        self.breaks.len() - 1
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Quadrature of nodal values against weight r^{p}.
    pub fn integrate_weighted(&self, values: &[f64], p: i32) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .zip(values)
            .map(|((&r, &w), &v)| w * r.powi(p) * v)
            .sum()
    }

    /// Derivative of a nodal function by per-panel spectral differentiation
    /// of the Gauss-Legendre interpolant.
    pub fn differentiate(&self, values: &[f64]) -> Result<Vec<f64>> {
        if values.len() != self.len() {
            return Err(Error::InvalidInput(format!(
                "value count {} does not match grid size {}",
                values.len(),
                self.len()
            )));
        }
        let dref = diff_matrix(self.ppp);
        let mut out = vec![0.0; values.len()];
        for p in 0..self.panels() {
            let a = self.breaks[p];
            let b = self.breaks[p + 1];
            let scale = 2.0 / (b - a);
            let base = p * self.ppp;
            for i in 0..self.ppp {
                let mut acc = 0.0;
                for j in 0..self.ppp {
                    acc += dref[i * self.ppp + j] * values[base + j];
                }
                out[base + i] = acc * scale;
            }
        }
        Ok(out)
    }

    /// Index of the first node with r > cut (node-level partition).
    pub fn first_node_above(&self, cut: f64) -> usize {
        self.nodes.partition_point(|&r| r <= cut)
    }
}

/// Lagrange differentiation matrix on the `n`-point Gauss-Legendre reference
/// nodes, row-major.
fn diff_matrix(n: usize) -> Vec<f64> {
    let rule = Rule::gauss_legendre(n).expect("reference rule");
    let x = &rule.nodes;
    // barycentric weights
    let mut wb = vec![1.0; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                wb[i] *= x[i] - x[j];
            }
        }
        wb[i] = 1.0 / wb[i];
    }
    let mut d = vec![0.0; n * n];
    for i in 0..n {
        let mut row_sum = 0.0;
        for j in 0..n {
            if i != j {
                let v = wb[j] / wb[i] / (x[i] - x[j]);
                d[i * n + j] = v;
                row_sum += v;
            }
        }
        d[i * n + i] = -row_sum;
    }
    d
}
