//! Gaussian-profile family: f = -alpha n x^(2n-1), g = gamma exp(-alpha x^(2n)).
//!
//! Here g' = 2 f g identically, so with eps_i = 0 the upstairs potential is
//! exactly real, with no constraint tying gamma to the other parameters:
//!
//! ```text
//!   U(0) = alpha n (2n-1) x^(2n-2) + alpha^2 n^2 x^(4n-2)
//!          - gamma^2 exp(-2 alpha x^(2n)) + eps_r
//!   U(1) = -alpha n (2n-1) x^(2n-2) + alpha^2 n^2 x^(4n-2)
//!          - gamma^2 exp(-2 alpha x^(2n)) + eps_r
//!          - 4 i n alpha gamma x^(2n-1) exp(-alpha x^(2n))
//! ```
//!
//! The real part grows like x^(4n-2), so both members have purely discrete
//! spectra. The raising-charge zero mode exp(+integral of W) is proportional
//! to exp(-alpha x^(2n)/2) and is normalizable; it is annihilated by q+, so
//! the second partner keeps an extra genuine level at eps_r on top of the
//! ladder shared with the (real) first partner.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{GridSpec, SampledFunction};
use crate::superpotential::{PotentialPair, Superpotential};

pub fn gaussian_model(
    n: u32,
    alpha: f64,
    gamma: f64,
    eps_r: f64,
    grid: GridSpec,
) -> Result<(Superpotential, PotentialPair)> {
    if n == 0 {
        return Err(Error::InvalidParameter {
            name: "n",
            reason: "the exponent index must be at least 1".into(),
        });
    }
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::InvalidParameter {
            name: "alpha",
            reason: format!("needs alpha > 0 for a decaying profile, got {alpha}"),
        });
    }
    if !gamma.is_finite() || !eps_r.is_finite() {
        return Err(Error::InvalidParameter {
            name: "gamma",
            reason: "gamma and eps_r must be finite".into(),
        });
    }
    let nf = f64::from(n);
    let p = 2 * n as i32;
    let points = grid.points;
    let mut f = Vec::with_capacity(points);
    let mut g = Vec::with_capacity(points);
    let mut fp = Vec::with_capacity(points);
    let mut gp = Vec::with_capacity(points);
    let mut v0 = Vec::with_capacity(points);
    let mut v1 = Vec::with_capacity(points);
    for &x in &grid.nodes() {
        let x2n1 = x.powi(p - 1);
        let x2n2 = x.powi(p - 2); // powi(0) == 1 everywhere, including x = 0

        let env = (-alpha * x.powi(p)).exp();
        let fv = -alpha * nf * x2n1;
        let gv = gamma * env;
        f.push(fv);
        g.push(gv);
        fp.push(-alpha * nf * (2.0 * nf - 1.0) * x2n2);
        gp.push(2.0 * fv * gv);
        let shared = alpha * alpha * nf * nf * x2n1 * x2n1 - gv * gv + eps_r;
        let bump = alpha * nf * (2.0 * nf - 1.0) * x2n2;
        v0.push(Complex64::new(shared + bump, 0.0));
        v1.push(Complex64::new(shared - bump, 4.0 * fv * gv));
    }
    let w = Superpotential::from_samples(grid, f, g, eps_r, 0.0)?.with_analytic_derivatives(fp, gp)?;
    let pair = PotentialPair {
        v0: SampledFunction::from_values(grid, v0)?,
        v1: SampledFunction::from_values(grid, v1)?,
    };
    Ok((w, pair))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpotential::{make_partners, zero_mode, Supercharge};

    #[test]
    fn closed_forms_match_generic_construction() {
        let grid = GridSpec::line(6.0, 1201).unwrap();
        for &(n, alpha, gamma) in &[(1, 1.0, 1.0), (1, 0.5, 2.0), (2, 0.8, 1.3)] {
            let (w, pair) = gaussian_model(n, alpha, gamma, 0.1, grid).unwrap();
            let generic = make_partners(&w);
            let scale = 1.0 + pair.v0.max_abs().max(pair.v1.max_abs());
            let d0 = pair.v0.zip(&generic.v0, |a, b| a - b).unwrap().max_abs();
            let d1 = pair.v1.zip(&generic.v1, |a, b| a - b).unwrap().max_abs();
            assert!(
                d0 < 1e-12 * scale && d1 < 1e-12 * scale,
                "(n,alpha,gamma)=({n},{alpha},{gamma}): {d0:.2e}, {d1:.2e}"
            );
            assert!(pair.v0.values().iter().all(|z| z.im == 0.0));
        }
    }

    #[test]
    fn center_values_for_the_basic_profile() {
        // n = 1, alpha = gamma = 1, eps_r = 0: at the origin the curvature
        // term gives +1, the well -1, so U(0) = 0 and U(1) = -2 there.
        let grid = GridSpec::line(6.0, 1201).unwrap();
        let (_, pair) = gaussian_model(1, 1.0, 1.0, 0.0, grid).unwrap();
        let mid = 600;
        assert!((pair.v0.values()[mid] - Complex64::new(0.0, 0.0)).norm() < 1e-14);
        assert!((pair.v1.values()[mid] - Complex64::new(-2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn raising_mode_is_the_normalizable_one() {
        let grid = GridSpec::line(8.0, 1601).unwrap();
        let (w, _) = gaussian_model(1, 1.0, 1.0, 0.0, grid).unwrap();
        let up = zero_mode(&w, Supercharge::Raising);
        let down = zero_mode(&w, Supercharge::Lowering);
        assert!(up.normalizable && !up.clamped);
        assert!(!down.normalizable);
    }

    #[test]
    fn zero_exponent_index_rejected() {
        let grid = GridSpec::line(6.0, 1201).unwrap();
        assert!(gaussian_model(0, 1.0, 1.0, 0.0, grid).is_err());
        assert!(gaussian_model(1, -1.0, 1.0, 0.0, grid).is_err());
    }
}
