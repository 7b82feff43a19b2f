//! Radial quasi-complex families on the half line.
//!
//! With g(r) = a r phi(r) for a bounded, positive envelope phi and
//! f = (g' - eps_i)/(2g), the first partner potential U(0) is real
//! (quasi-complex construction) and behaves like a centrifugal term near the
//! origin: matching the 1/r poles of f fixes the amplitude a in terms of
//! eps_i and an integer l0,
//!
//! ```text
//!   physical branch:    f ~ -(l0+1)/r,  a =  eps_i / (2 l0 + 3)
//!   unphysical branch:  f ~ +l0/r,      a = -eps_i / (2 l0 - 1),  l0 >= 1
//! ```
//!
//! giving U(0) ~ l0(l0+1)/r^2 (physical) while the partner U(1) carries the
//! shifted index: (l0+1)(l0+2)/r^2 for the physical branch, l0(l0-1)/r^2 for
//! the unphysical one. With eps_i = 0 the same construction runs through
//! g = mu r^{2 l0} phi(r) and f = g'/(2g), again with U(0) ~ l0(l0+1)/r^2.
//!
//! Everything is sampled strictly inside (0, L], so the singular point r = 0
//! never enters; [`crate::analysis::centrifugal_index`] recovers the indices
//! from the sampled potentials.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{Domain, GridSpec, SampledFunction};
use crate::superpotential::{PotentialPair, Superpotential};

/// Which 1/r asymptotics of f to select when eps_i != 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialBranch {
    /// f ~ -(l0+1)/r; the partner ladder moves up: U(1) ~ (l0+1)(l0+2)/r^2.
    Physical,
    /// f ~ +l0/r (requires l0 >= 1); the ladder moves down.
    Unphysical,
}

/// Bounded envelope phi(r) multiplying the linear profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Envelope {
    /// phi = 1/(r^{2m} + 1), m >= 1.
    Rational { m: u32 },
    /// phi = exp(-alpha r), alpha > 0.
    Exponential { alpha: f64 },
}

impl Envelope {
    /// (phi, phi', phi'') at r.
    fn eval(&self, r: f64) -> (f64, f64, f64) {
        match *self {
            Envelope::Rational { m } => {
                let p = 2.0 * m as f64;
                let u = r.powf(p) + 1.0;
                let up = p * r.powf(p - 1.0);
                let upp = p * (p - 1.0) * r.powf(p - 2.0);
                let phi = 1.0 / u;
                let phi1 = -up / (u * u);
                let phi2 = -upp / (u * u) + 2.0 * up * up / (u * u * u);
                (phi, phi1, phi2)
            }
            Envelope::Exponential { alpha } => {
                let phi = (-alpha * r).exp();
                (phi, -alpha * phi, alpha * alpha * phi)
            }
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Envelope::Rational { m } => {
                if m == 0 {
                    Err(Error::InvalidParameter {
                        name: "m",
                        reason: "rational envelope needs m >= 1".into(),
                    })
                } else {
                    Ok(())
                }
            }
            Envelope::Exponential { alpha } => {
                if alpha.is_finite() && alpha > 0.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter {
                        name: "alpha",
                        reason: format!("exponential envelope needs alpha > 0, got {alpha}"),
                    })
                }
            }
        }
    }
}

/// Build the radial quasi-complex pair on a half-line grid.
///
/// For `eps_i != 0` the amplitude comes from `branch` and `mu` is ignored;
/// for `eps_i == 0` the profile is g = mu r^{2 l0} phi and `mu` is required
/// (`branch` is ignored). U(0) is real by construction and its sampled
/// imaginary part is stored as exactly zero.
pub fn radial_quasi_complex(
    l0: u32,
    eps_r: f64,
    eps_i: f64,
    branch: RadialBranch,
    envelope: Envelope,
    mu: Option<f64>,
    grid: GridSpec,
) -> Result<(Superpotential, PotentialPair)> {
    if grid.domain != Domain::HalfLine {
        return Err(Error::WrongDomain {
            required: "half_line",
            got: grid.domain.name(),
        });
    }
    if !eps_r.is_finite() || !eps_i.is_finite() {
        return Err(Error::InvalidParameter {
            name: "eps",
            reason: "factorization energy must be finite".into(),
        });
    }
    envelope.validate()?;

    let n = grid.points;
    let mut g = vec![0.0; n];
    let mut g1 = vec![0.0; n];
    let mut g2 = vec![0.0; n];

    if eps_i != 0.0 {
        let a = match branch {
            RadialBranch::Physical => eps_i / (2.0 * l0 as f64 + 3.0),
            RadialBranch::Unphysical => {
                if l0 == 0 {
                    return Err(Error::InvalidParameter {
                        name: "l0",
                        reason: "the unphysical branch needs l0 >= 1 when eps_i != 0".into(),
                    });
                }
                -eps_i / (2.0 * l0 as f64 - 1.0)
            }
        };
        for (j, &r) in grid.nodes().iter().enumerate() {
            let (phi, phi1, phi2) = envelope.eval(r);
            g[j] = a * r * phi;
            g1[j] = a * (phi + r * phi1);
            g2[j] = a * (2.0 * phi1 + r * phi2);
        }
    } else {
        let mu = mu.ok_or(Error::InvalidParameter {
            name: "mu",
            reason: "eps_i = 0 needs an explicit amplitude mu".into(),
        })?;
        if !mu.is_finite() || mu == 0.0 {
            return Err(Error::InvalidParameter {
                name: "mu",
                reason: format!("amplitude must be finite and nonzero, got {mu}"),
            });
        }
        let p = 2.0 * l0 as f64;
        for (j, &r) in grid.nodes().iter().enumerate() {
            let (phi, phi1, phi2) = envelope.eval(r);
            let rp = r.powf(p);
            let rp1 = if l0 == 0 { 0.0 } else { p * r.powf(p - 1.0) };
            let rp2 = if l0 == 0 {
                0.0
            } else {
                p * (p - 1.0) * r.powf(p - 2.0)
            };
            g[j] = mu * rp * phi;
            g1[j] = mu * (rp1 * phi + rp * phi1);
            g2[j] = mu * (rp2 * phi + 2.0 * rp1 * phi1 + rp * phi2);
        }
    }

    // f = (g' - eps_i)/(2g); f' = g''/(2g) - g'(g' - eps_i)/(2g^2).
    let mut f = vec![0.0; n];
    let mut f1 = vec![0.0; n];
    for j in 0..n {
        if g[j] == 0.0 {
            return Err(Error::InvalidParameter {
                name: "envelope",
                reason: format!("profile vanished at node {j}; f = (g'-eps_i)/2g undefined"),
            });
        }
        f[j] = (g1[j] - eps_i) / (2.0 * g[j]);
        f1[j] = g2[j] / (2.0 * g[j]) - g1[j] * (g1[j] - eps_i) / (2.0 * g[j] * g[j]);
    }

    // U(0) = f^2 - g^2 - f' + eps_r, exactly real; U(1) differs by
    // 2 f' + 2 i g'. Both are assembled from the primitive terms directly:
    // near the origin f' and f^2 are individually O(1/r^2) and the partner
    // whose pole cancels must not be computed by subtracting the other's.
    let mut v0 = Vec::with_capacity(n);
    let mut v1 = Vec::with_capacity(n);
    for j in 0..n {
        let w2 = f[j] * f[j] - g[j] * g[j];
        v0.push(Complex64::new(w2 - f1[j] + eps_r, 0.0));
        v1.push(Complex64::new(w2 + f1[j] + eps_r, 2.0 * g1[j]));
    }

    let w = Superpotential::from_samples(grid, f, g, eps_r, eps_i)?
        .with_analytic_derivatives(f1, g1)?;
    let pair = PotentialPair {
        v0: SampledFunction::from_values(grid, v0)?,
        v1: SampledFunction::from_values(grid, v1)?,
    };
    Ok((w, pair))
}
