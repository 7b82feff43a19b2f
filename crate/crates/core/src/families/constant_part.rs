//! Superpotentials with one constant component.
//!
//! Freezing either component of W = f + i g makes the structure of the
//! imaginary parts transparent:
//!
//! * g = kappa constant: both partners share the same imaginary part
//!   2 kappa f + eps_i, while the real parts differ by the usual 2 f'.
//! * f = lambda constant: both partners share the same real part
//!   lambda^2 - g^2 + eps_r, and the imaginary parts -g' + 2 lambda g + eps_i
//!   and +g' + 2 lambda g + eps_i differ only through the sign of g'.
//!
//! With a bounded shape for g the whole imaginary part stays bounded, which
//! is the regime where finite gain/loss profiles make sense.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{GridSpec, SampledFunction};
use crate::superpotential::{PotentialPair, Superpotential};

/// Bounded profiles for g in the constant-f family, with exact derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundedGShape {
    /// g = sech x
    Sech,
    /// g = cosh x / cosh 2x
    CoshRatio,
    /// g = exp(-x) sech 2x (asymmetric: the exponential wins on the right)
    ExpSech,
}

impl BoundedGShape {
    /// Returns (g, g') at x.
    pub fn eval(self, x: f64) -> (f64, f64) {
        match self {
            BoundedGShape::Sech => {
                let s = 1.0 / x.cosh();
                (s, -s * x.tanh())
            }
            BoundedGShape::CoshRatio => {
                let s2 = 1.0 / (2.0 * x).cosh();
                let g = x.cosh() * s2;
                (g, s2 * (x.sinh() - 2.0 * x.cosh() * (2.0 * x).tanh()))
            }
            BoundedGShape::ExpSech => {
                let e = (-x).exp();
                let s2 = 1.0 / (2.0 * x).cosh();
                (e * s2, -e * s2 * (1.0 + 2.0 * (2.0 * x).tanh()))
            }
        }
    }
}

/// Partner pair for W = f(x) + i kappa with a caller-supplied real part.
pub fn constant_g(
    kappa: f64,
    f: impl Fn(f64) -> f64,
    f_prime: impl Fn(f64) -> f64,
    eps_r: f64,
    eps_i: f64,
    grid: GridSpec,
) -> Result<(Superpotential, PotentialPair)> {
    if !kappa.is_finite() {
        return Err(Error::InvalidParameter {
            name: "kappa",
            reason: format!("must be finite, got {kappa}"),
        });
    }
    if !eps_r.is_finite() || !eps_i.is_finite() {
        return Err(Error::InvalidParameter {
            name: "eps_r",
            reason: "factorization energy must be finite".into(),
        });
    }
    let n = grid.points;
    let mut fs = Vec::with_capacity(n);
    let mut fps = Vec::with_capacity(n);
    let mut v0 = Vec::with_capacity(n);
    let mut v1 = Vec::with_capacity(n);
    for &x in &grid.nodes() {
        let fv = f(x);
        let fpv = f_prime(x);
        fs.push(fv);
        fps.push(fpv);
        let re = fv * fv - kappa * kappa + eps_r;
        let im = 2.0 * kappa * fv + eps_i;
        v0.push(Complex64::new(re - fpv, im));
        v1.push(Complex64::new(re + fpv, im));
    }
    let w = Superpotential::from_samples(grid, fs, vec![kappa; n], eps_r, eps_i)?
        .with_analytic_derivatives(fps, vec![0.0; n])?;
    let pair = PotentialPair {
        v0: SampledFunction::from_values(grid, v0)?,
        v1: SampledFunction::from_values(grid, v1)?,
    };
    Ok((w, pair))
}

/// Partner pair for W = lambda + i g(x) with a bounded builtin shape for g.
pub fn constant_f(
    lambda: f64,
    shape: BoundedGShape,
    eps_r: f64,
    eps_i: f64,
    grid: GridSpec,
) -> Result<(Superpotential, PotentialPair)> {
    if !lambda.is_finite() {
        return Err(Error::InvalidParameter {
            name: "lambda",
            reason: format!("must be finite, got {lambda}"),
        });
    }
    if !eps_r.is_finite() || !eps_i.is_finite() {
        return Err(Error::InvalidParameter {
            name: "eps_r",
            reason: "factorization energy must be finite".into(),
        });
    }
    let n = grid.points;
    let mut gs = Vec::with_capacity(n);
    let mut gps = Vec::with_capacity(n);
    let mut v0 = Vec::with_capacity(n);
    let mut v1 = Vec::with_capacity(n);
    for &x in &grid.nodes() {
        let (gv, gpv) = shape.eval(x);
        gs.push(gv);
        gps.push(gpv);
        let re = lambda * lambda - gv * gv + eps_r;
        let im = 2.0 * lambda * gv + eps_i;
        v0.push(Complex64::new(re, im - gpv));
        v1.push(Complex64::new(re, im + gpv));
    }
    let w = Superpotential::from_samples(grid, vec![lambda; n], gs, eps_r, eps_i)?
        .with_analytic_derivatives(vec![0.0; n], gps)?;
    let pair = PotentialPair {
        v0: SampledFunction::from_values(grid, v0)?,
        v1: SampledFunction::from_values(grid, v1)?,
    };
    Ok((w, pair))
}
