//! The tanh model: W = (-alpha/2 + i beta) tanh(alpha x) with the
//! factorization energy locked to eps = eps_r + i alpha beta.
//!
//! This is the workhorse family for dissipative spectra. The closed forms
//! are
//!
//! ```text
//!   U(0) = eps_r + alpha^2/4 - beta^2 + (alpha^2/4 + beta^2) sech^2(alpha x)
//!   U(1) = eps_r + alpha^2/4 - beta^2 + (beta^2 - 3 alpha^2/4) sech^2(alpha x)
//!                + 2 i alpha beta sech^2(alpha x)
//! ```
//!
//! U(0) is real (quasi-complex pair); for alpha beta < 0 the partner U(1)
//! has a strictly non-positive imaginary part (dissipative) and carries a
//! single bound state at exactly E = eps_r + i alpha beta, the zero mode of
//! the raising supercharge, psi ~ cosh(alpha x)^{-1/2 + i beta/alpha}. That
//! state decays only for |beta| < |alpha|/2 (its real energy must sit below
//! the continuum threshold eps_r + alpha^2/4 - beta^2).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{GridSpec, SampledFunction};
use crate::superpotential::{PotentialPair, Superpotential};

pub fn tanh_model(
    alpha: f64,
    beta: f64,
    eps_r: f64,
    grid: GridSpec,
) -> Result<(Superpotential, PotentialPair)> {
    for (name, v) in [("alpha", alpha), ("beta", beta), ("eps_r", eps_r)] {
        if !v.is_finite() {
            return Err(Error::InvalidParameter {
                name: if name == "alpha" {
                    "alpha"
                } else if name == "beta" {
                    "beta"
                } else {
                    "eps_r"
                },
                reason: format!("must be finite, got {v}"),
            });
        }
    }
    if alpha == 0.0 {
        return Err(Error::InvalidParameter {
            name: "alpha",
            reason: "alpha = 0 degenerates the profile to a constant".into(),
        });
    }
    let eps_i = alpha * beta;
    let n = grid.points;
    let mut f = Vec::with_capacity(n);
    let mut g = Vec::with_capacity(n);
    let mut fp = Vec::with_capacity(n);
    let mut gp = Vec::with_capacity(n);
    let mut v0 = Vec::with_capacity(n);
    let mut v1 = Vec::with_capacity(n);
    let base = eps_r + 0.25 * alpha * alpha - beta * beta;
    for &x in &grid.nodes() {
        let t = (alpha * x).tanh();
        let sech2 = 1.0 - t * t;
        f.push(-0.5 * alpha * t);
        g.push(beta * t);
        fp.push(-0.5 * alpha * alpha * sech2);
        gp.push(alpha * beta * sech2);
        v0.push(Complex64::new(
            base + (0.25 * alpha * alpha + beta * beta) * sech2,
            0.0,
        ));
        v1.push(Complex64::new(
            base + (beta * beta - 0.75 * alpha * alpha) * sech2,
            2.0 * alpha * beta * sech2,
        ));
    }
    let w = Superpotential::from_samples(grid, f, g, eps_r, eps_i)?.with_analytic_derivatives(fp, gp)?;
    let pair = PotentialPair {
        v0: SampledFunction::from_values(grid, v0)?,
        v1: SampledFunction::from_values(grid, v1)?,
    };
    Ok((w, pair))
}
