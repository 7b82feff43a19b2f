//! Uniform finite-difference grids and functions sampled on them.
//!
//! Two domain types cover the toolkit: the full line, truncated to [-L, L]
//! with both endpoints on nodes, and the half line (0, L] used for radial
//! problems, where the first node sits at r = h so the centrifugal
//! singularity at r = 0 is never sampled. Dirichlet boundary conditions are
//! implied one step outside the sampled range in both cases.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Minimum number of grid points. Below this the second-order stencils and
/// the edge-based decay diagnostics stop making sense.
pub const MIN_POINTS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    /// x in [-L, L], spacing h = 2L/(N-1), node j at -L + j h.
    Line,
    /// r in (0, L], spacing h = L/N, node j at (j+1) h.
    HalfLine,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::Line => "line",
            Domain::HalfLine => "half_line",
        }
    }
}

/// A uniform grid: domain type, extent L, and number of points N.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub domain: Domain,
    #[serde(rename = "L")]
    pub extent: f64,
    #[serde(rename = "N")]
    pub points: usize,
}

impl GridSpec {
    /// Grid on [-extent, extent] with `points` nodes including both endpoints.
    pub fn line(extent: f64, points: usize) -> Result<Self> {
        Self::new(Domain::Line, extent, points)
    }

    /// Grid on (0, extent] with `points` nodes; the first node is at r = h.
    pub fn half_line(extent: f64, points: usize) -> Result<Self> {
        Self::new(Domain::HalfLine, extent, points)
    }

    pub fn new(domain: Domain, extent: f64, points: usize) -> Result<Self> {
        if !extent.is_finite() || extent <= 0.0 {
            return Err(Error::InvalidGrid(format!(
                "extent must be positive and finite, got {extent}"
            )));
        }
        if points < MIN_POINTS {
            return Err(Error::InvalidGrid(format!(
                "need at least {MIN_POINTS} points, got {points}"
            )));
        }
        Ok(GridSpec {
            domain,
            extent,
            points,
        })
    }

    /// Node spacing.
    pub fn spacing(&self) -> f64 {
        match self.domain {
            Domain::Line => 2.0 * self.extent / (self.points as f64 - 1.0),
            Domain::HalfLine => self.extent / self.points as f64,
        }
    }

    /// Coordinate of node `i`.
    pub fn node(&self, i: usize) -> f64 {
        let h = self.spacing();
        match self.domain {
            Domain::Line => -self.extent + i as f64 * h,
            Domain::HalfLine => (i as f64 + 1.0) * h,
        }
    }

    /// All node coordinates in order.
    pub fn nodes(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.node(i)).collect()
    }

    /// Number of nodes in one 5%-edge window (at least one node).
    pub fn edge_window(&self) -> usize {
        (self.points / 20).max(1)
    }
}

/// A complex-valued function sampled on a grid. All values are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    grid: GridSpec,
    values: Vec<Complex64>,
}

impl SampledFunction {
    /// Validate and wrap existing samples.
    pub fn from_values(grid: GridSpec, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.points {
            return Err(Error::InvalidGrid(format!(
                "expected {} samples, got {}",
                grid.points,
                values.len()
            )));
        }
        for (i, v) in values.iter().enumerate() {
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFiniteSample(i));
            }
        }
        Ok(SampledFunction { grid, values })
    }

    /// Sample a complex-valued closure on the grid nodes.
    pub fn from_fn(grid: GridSpec, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        Self::from_values(grid, grid.nodes().iter().map(|&x| f(x)).collect())
    }

    /// Sample a real-valued closure on the grid nodes.
    pub fn from_real_fn(grid: GridSpec, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::from_fn(grid, |x| Complex64::new(f(x), 0.0))
    }

    /// The identically-zero function.
    pub fn zero(grid: GridSpec) -> Self {
        SampledFunction {
            grid,
            values: vec![Complex64::new(0.0, 0.0); grid.points],
        }
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Real parts of the samples.
    pub fn real_values(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }

    /// Imaginary parts of the samples.
    pub fn imag_values(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.im).collect()
    }

    /// Largest |value| over all nodes.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest |value| over the outer 5% of nodes at each end.
    pub fn max_abs_at_edges(&self) -> f64 {
        let w = self.grid.edge_window();
        let n = self.values.len();
        let mut m: f64 = 0.0;
        for i in 0..w {
            m = m.max(self.values[i].norm());
            m = m.max(self.values[n - 1 - i].norm());
        }
        m
    }

    /// Apply a node-wise map, keeping the grid.
    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        SampledFunction {
            grid: self.grid,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Node-wise combination of two functions on the same grid.
    pub fn zip(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(SampledFunction {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }
}
