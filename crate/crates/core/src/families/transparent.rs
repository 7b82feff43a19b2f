//! Transparent partner families: V(0) vanishes identically, so H(0) is the
//! free particle and the intertwining forces H(1) to be reflectionless at
//! every wavenumber.
//!
//! Three regimes, organized by the factorization energy:
//!
//! * eps = 0: W = -1/(x + b + i/a). V(1) = 2/(x + b + i/a)^2 with the
//!   Lorentzian imaginary profile g = a/(1 + a^2 (x+b)^2).
//! * eps < 0 (real): W = -kappa tanh(kappa (x+b) + i rho), kappa^2 = -eps.
//!   V(1) = 2 eps / cosh^2(kappa (x+b) + i rho), which also carries a single
//!   bound state at exactly E = eps.
//! * eps > 0 (real): the quasi-complex profile g = 2 eps / D(x) with
//!   D = A - sqrt(A^2 - 4 eps) cos(2 sqrt(eps) (x+b)) and f = -D'/(2D);
//!   here V(0) = 0 identically even though W is genuinely complex-periodic.
//!
//! As eps -> 0 from either side the bounded g-profiles collapse onto the
//! Lorentzian of the eps = 0 family; [`negative_energy_g_profile`] exposes
//! the closed-form profile used to check that limit from below.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{GridSpec, SampledFunction};
use crate::superpotential::{PotentialPair, Superpotential};

fn require_finite(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            reason: format!("must be finite, got {v}"),
        })
    }
}

/// Zero-energy transparent pair: W = -1/(x + b + i/a).
pub fn zero_energy(a: f64, b: f64, grid: GridSpec) -> Result<(Superpotential, PotentialPair)> {
    require_finite("a", a)?;
    require_finite("b", b)?;
    if a == 0.0 {
        return Err(Error::InvalidParameter {
            name: "a",
            reason: "profile width 1/a is undefined for a = 0".into(),
        });
    }
    let xs = grid.nodes();
    let n = grid.points;
    let mut f = Vec::with_capacity(n);
    let mut g = Vec::with_capacity(n);
    let mut fp = Vec::with_capacity(n);
    let mut gp = Vec::with_capacity(n);
    let mut v1 = Vec::with_capacity(n);
    for &x in &xs {
        let t = x + b;
        let d = 1.0 + a * a * t * t;
        f.push(-a * a * t / d);
        g.push(a / d);
        fp.push(a * a * (a * a * t * t - 1.0) / (d * d));
        gp.push(-2.0 * a * a * a * t / (d * d));
        let z = Complex64::new(t, 1.0 / a);
        v1.push(2.0 / (z * z));
    }
    let w = Superpotential::from_samples(grid, f, g, 0.0, 0.0)?.with_analytic_derivatives(fp, gp)?;
    let pair = PotentialPair {
        v0: SampledFunction::zero(grid),
        v1: SampledFunction::from_values(grid, v1)?,
    };
    Ok((w, pair))
}

/// Negative-energy transparent pair: W = -kappa tanh(kappa (x+b) + i rho)
/// with kappa = sqrt(-eps_r). V(1) = 2 eps_r / cosh^2(kappa (x+b) + i rho)
/// holds a single bound state at exactly eps_r.
///
/// rho is the phase angle of the complex shift; values with cos(rho) = 0
/// put a pole of tanh on the real axis and are rejected. The sign of rho
/// flips the sign of Im W.
pub fn negative_energy(
    eps_r: f64,
    rho: f64,
    b: f64,
    grid: GridSpec,
) -> Result<(Superpotential, PotentialPair)> {
    require_finite("eps_r", eps_r)?;
    require_finite("rho", rho)?;
    require_finite("b", b)?;
    if eps_r >= 0.0 {
        return Err(Error::InvalidParameter {
            name: "eps_r",
            reason: format!("this family needs a negative energy, got {eps_r}"),
        });
    }
    if rho.cos().abs() < 1e-6 {
        return Err(Error::InvalidParameter {
            name: "rho",
            reason: "cos(rho) ~ 0 puts a singularity of tanh on the real axis".into(),
        });
    }
    let kappa = (-eps_r).sqrt();
    let n = grid.points;
    let mut f = Vec::with_capacity(n);
    let mut g = Vec::with_capacity(n);
    let mut fp = Vec::with_capacity(n);
    let mut gp = Vec::with_capacity(n);
    let mut v1 = Vec::with_capacity(n);
    for &x in &grid.nodes() {
        let z = Complex64::new(kappa * (x + b), rho);
        let th = z.tanh();
        let w = -kappa * th;
        f.push(w.re);
        g.push(w.im);
        // W' = -kappa^2 sech^2 z = -kappa^2 (1 - tanh^2 z).
        let wp = -kappa * kappa * (1.0 - th * th);
        fp.push(wp.re);
        gp.push(wp.im);
        let ch = z.cosh();
        v1.push(2.0 * eps_r / (ch * ch));
    }
    let w = Superpotential::from_samples(grid, f, g, eps_r, 0.0)?.with_analytic_derivatives(fp, gp)?;
    let pair = PotentialPair {
        v0: SampledFunction::zero(grid),
        v1: SampledFunction::from_values(grid, v1)?,
    };
    Ok((w, pair))
}

/// The closed-form Im W profile of the negative-energy family written with
/// the amplitude parameter A instead of the phase rho:
///
/// ```text
///   g(x) = 2 eps_r / (A - sqrt(A^2 - 4 eps_r) cosh(2 kappa (x+b)))
/// ```
///
/// For eps_r < 0 the square root dominates |A|, so the denominator is
/// bounded away from zero for every real A. As eps_r -> 0- this collapses
/// onto the Lorentzian a/(1 + a^2 (x+b)^2) with a = A.
pub fn negative_energy_g_profile(
    eps_r: f64,
    a: f64,
    b: f64,
    grid: GridSpec,
) -> Result<SampledFunction> {
    require_finite("eps_r", eps_r)?;
    require_finite("a", a)?;
    require_finite("b", b)?;
    if eps_r >= 0.0 {
        return Err(Error::InvalidParameter {
            name: "eps_r",
            reason: format!("this profile needs a negative energy, got {eps_r}"),
        });
    }
    let kappa = (-eps_r).sqrt();
    let q = (a * a - 4.0 * eps_r).sqrt();
    SampledFunction::from_real_fn(grid, |x| {
        2.0 * eps_r / (a - q * (2.0 * kappa * (x + b)).cosh())
    })
}

/// The zero-energy Lorentzian profile g = a/(1 + a^2 (x+b)^2).
pub fn lorentzian_profile(a: f64, b: f64, grid: GridSpec) -> Result<SampledFunction> {
    require_finite("a", a)?;
    require_finite("b", b)?;
    if a == 0.0 {
        return Err(Error::InvalidParameter {
            name: "a",
            reason: "profile width 1/a is undefined for a = 0".into(),
        });
    }
    SampledFunction::from_real_fn(grid, |x| {
        let t = x + b;
        a / (1.0 + a * a * t * t)
    })
}

/// Positive-energy transparent pair, quasi-complex form: with s = sqrt(eps_r)
/// and q = sqrt(A^2 - 4 eps_r),
///
/// ```text
///   D(x) = A - q cos(2 s (x+b)),   g = 2 eps_r / D,   f = -D'/(2D).
/// ```
///
/// V(0) vanishes identically; V(1) = 2(f' + i g') is complex and periodic.
/// Requires eps_r > 0 and A^2 >= 4 eps_r (so q is real); |A| > q then keeps
/// D single-signed automatically.
pub fn positive_energy(
    eps_r: f64,
    a: f64,
    b: f64,
    grid: GridSpec,
) -> Result<(Superpotential, PotentialPair)> {
    require_finite("eps_r", eps_r)?;
    require_finite("a", a)?;
    require_finite("b", b)?;
    if eps_r <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "eps_r",
            reason: format!("this family needs a positive energy, got {eps_r}"),
        });
    }
    if a * a < 4.0 * eps_r {
        return Err(Error::InvalidParameter {
            name: "a",
            reason: format!("need A^2 >= 4 eps_r for a real profile, got A^2 = {}", a * a),
        });
    }
    let s = eps_r.sqrt();
    let q = (a * a - 4.0 * eps_r).sqrt();
    let n = grid.points;
    let mut f = Vec::with_capacity(n);
    let mut g = Vec::with_capacity(n);
    let mut fp = Vec::with_capacity(n);
    let mut gp = Vec::with_capacity(n);
    let mut v1 = Vec::with_capacity(n);
    for &x in &grid.nodes() {
        let t = 2.0 * s * (x + b);
        let d = a - q * t.cos();
        let d1 = 2.0 * s * q * t.sin();
        let d2 = 4.0 * s * s * q * t.cos();
        let fj = -d1 / (2.0 * d);
        let fpj = -d2 / (2.0 * d) + d1 * d1 / (2.0 * d * d);
        let gj = 2.0 * eps_r / d;
        let gpj = -2.0 * eps_r * d1 / (d * d);
        f.push(fj);
        g.push(gj);
        fp.push(fpj);
        gp.push(gpj);
        v1.push(Complex64::new(2.0 * fpj, 2.0 * gpj));
    }
    let w = Superpotential::from_samples(grid, f, g, eps_r, 0.0)?.with_analytic_derivatives(fp, gp)?;
    let pair = PotentialPair {
        v0: SampledFunction::zero(grid),
        v1: SampledFunction::from_values(grid, v1)?,
    };
    Ok((w, pair))
}
