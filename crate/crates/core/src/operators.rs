//! Discrete operators: the finite-difference Hamiltonian, differentiation,
//! and integration on a grid.
//!
//! The Hamiltonian H = -d^2/dx^2 + V(x) (units hbar = 2m = 1) becomes, with
//! the three-point Laplacian and Dirichlet conditions one step outside the
//! sampled range, a tridiagonal matrix with diagonal 2/h^2 + V(x_j) and
//! off-diagonal -1/h^2. The matrix is symmetric (not hermitian) for complex
//! V, which is exactly the structure the eigensolver in [`crate::eigen`]
//! exploits.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{GridSpec, SampledFunction};

/// A complex symmetric tridiagonal operator tied to a grid.
#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    grid: GridSpec,
    diag: Vec<Complex64>,
    off: Vec<Complex64>,
}

impl OperatorMatrix {
    pub fn new(grid: GridSpec, diag: Vec<Complex64>, off: Vec<Complex64>) -> Result<Self> {
        if diag.len() != grid.points || off.len() + 1 != grid.points {
            return Err(Error::InvalidGrid(format!(
                "band lengths {}/{} do not fit a {}-point grid",
                diag.len(),
                off.len(),
                grid.points
            )));
        }
        Ok(OperatorMatrix { grid, diag, off })
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn dimension(&self) -> usize {
        self.diag.len()
    }

    pub fn diagonal(&self) -> &[Complex64] {
        &self.diag
    }

    pub fn off_diagonal(&self) -> &[Complex64] {
        &self.off
    }

    /// y = M x.
    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.diag.len();
        assert_eq!(x.len(), n, "matvec dimension mismatch");
        let mut y = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            let mut acc = self.diag[i] * x[i];
            if i > 0 {
                acc += self.off[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                acc += self.off[i] * x[i + 1];
            }
            y[i] = acc;
        }
        y
    }

    /// Max row sum of absolute values; an inf-norm scale for residual floors.
    pub fn row_scale(&self) -> f64 {
        let n = self.diag.len();
        let mut s: f64 = 0.0;
        for i in 0..n {
            let mut row = self.diag[i].norm();
            if i > 0 {
                row += self.off[i - 1].norm();
            }
            if i + 1 < n {
                row += self.off[i].norm();
            }
            s = s.max(row);
        }
        s
    }

    /// M + c I, used for spectral shifts.
    pub fn shifted(&self, c: Complex64) -> Self {
        OperatorMatrix {
            grid: self.grid,
            diag: self.diag.iter().map(|&d| d + c).collect(),
            off: self.off.clone(),
        }
    }
}

/// Dirichlet finite-difference Hamiltonian -d^2/dx^2 + V on the grid carried
/// by the potential samples.
pub fn build_hamiltonian(v: &SampledFunction) -> OperatorMatrix {
    let grid = v.grid();
    let h = grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let diag = v
        .values()
        .iter()
        .map(|&vj| vj + 2.0 * inv_h2)
        .collect::<Vec<_>>();
    let off = vec![Complex64::new(-inv_h2, 0.0); grid.points - 1];
    OperatorMatrix { grid, diag, off }
}

/// Second-order first derivative: central differences in the interior,
/// one-sided three-point stencils at the two boundary nodes.
pub fn differentiate(u: &SampledFunction) -> SampledFunction {
    let grid = u.grid();
    let h = grid.spacing();
    let v = u.values();
    let n = v.len();
    let mut d = vec![Complex64::new(0.0, 0.0); n];
    let two_h = 2.0 * h;
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / two_h;
    for i in 1..n - 1 {
        d[i] = (v[i + 1] - v[i - 1]) / two_h;
    }
    d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / two_h;
    SampledFunction::from_values(grid, d).expect("derivative of finite samples is finite")
}

/// Trapezoid-rule integral of the samples over the sampled range.
pub fn integrate(u: &SampledFunction) -> Complex64 {
    let v = u.values();
    let n = v.len();
    let mut acc = (v[0] + v[n - 1]) * 0.5;
    for &x in &v[1..n - 1] {
        acc += x;
    }
    acc * u.grid().spacing()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;

    #[test]
    fn hamiltonian_stencil_with_unit_spacing() {
        // 16 nodes on [-7.5, 7.5] gives h = 1 exactly; with V = 0 the matrix
        // must be diag(2), off-diag(-1).
        let g = GridSpec::line(7.5, 16).unwrap();
        assert_eq!(g.spacing(), 1.0);
        let v = SampledFunction::zero(g);
        let m = build_hamiltonian(&v);
        assert!(m.diagonal().iter().all(|d| (d.re - 2.0).abs() < 1e-15 && d.im == 0.0));
        assert!(m.off_diagonal().iter().all(|e| (e.re + 1.0).abs() < 1e-15 && e.im == 0.0));
    }

    #[test]
    fn matvec_matches_hand_expansion() {
        let g = GridSpec::line(7.5, 16).unwrap();
        let m = OperatorMatrix::new(
            g,
            (0..16).map(|i| Complex64::new(i as f64, 1.0)).collect(),
            (0..15).map(|i| Complex64::new(0.5, -0.1 * i as f64)).collect(),
        )
        .unwrap();
        let x: Vec<Complex64> = (0..16).map(|i| Complex64::new(1.0, i as f64)).collect();
        let y = m.matvec(&x);
        // row 0: d0 x0 + e0 x1
        let want0 = Complex64::new(0.0, 1.0) * x[0] + Complex64::new(0.5, 0.0) * x[1];
        assert!((y[0] - want0).norm() < 1e-14);
        // row 7: e6 x6 + d7 x7 + e7 x8
        let want7 = Complex64::new(0.5, -0.6) * x[6]
            + Complex64::new(7.0, 1.0) * x[7]
            + Complex64::new(0.5, -0.7) * x[8];
        assert!((y[7] - want7).norm() < 1e-14);
        // row 15: e14 x14 + d15 x15
        let want15 = Complex64::new(0.5, -1.4) * x[14] + Complex64::new(15.0, 1.0) * x[15];
        assert!((y[15] - want15).norm() < 1e-14);
    }

    #[test]
    fn derivative_of_sine_is_second_order() {
        // Central differences have error h^2/6 |u'''| <= 1.65e-6 for sin(x)
        // at h = pi/1000; the measured max interior error must sit at that
        // scale -- small, but not unrealistically smaller.
        let g = GridSpec::line(std::f64::consts::PI, 2001).unwrap();
        let u = SampledFunction::from_real_fn(g, f64::sin).unwrap();
        let d = differentiate(&u);
        let mut max_err: f64 = 0.0;
        for i in 1..2000 {
            let want = g.node(i).cos();
            max_err = max_err.max((d.values()[i].re - want).abs());
        }
        assert!(max_err < 2.0e-6, "interior error {max_err:.3e}");
        assert!(max_err > 1.0e-8, "implausibly small error {max_err:.3e}");
        // One-sided boundary stencils are also second order, with a larger
        // constant (h^2/3 |u'''|).
        let err0 = (d.values()[0].re - g.node(0).cos()).abs();
        let err_end = (d.values()[2000].re - g.node(2000).cos()).abs();
        assert!(err0 < 1.0e-5 && err_end < 1.0e-5);
    }

    #[test]
    fn derivative_halves_error_quadratically() {
        let err_at = |n: usize| {
            let g = GridSpec::line(std::f64::consts::PI, n).unwrap();
            let u = SampledFunction::from_real_fn(g, f64::sin).unwrap();
            let d = differentiate(&u);
            let mut m: f64 = 0.0;
            for i in 1..n - 1 {
                m = m.max((d.values()[i].re - g.node(i).cos()).abs());
            }
            m
        };
        let ratio = err_at(501) / err_at(1001);
        assert!((ratio - 4.0).abs() < 0.3, "convergence ratio {ratio}");
    }

    #[test]
    fn integrate_gaussian_recovers_sqrt_pi() {
        // Trapezoid on a smooth function that has decayed at the ends is
        // spectrally accurate; the tail truncation at |x| = 10 contributes
        // ~1e-44. sqrt(pi) to machine precision.
        let g = GridSpec::line(10.0, 2001).unwrap();
        let u = SampledFunction::from_real_fn(g, |x| (-x * x).exp()).unwrap();
        let got = integrate(&u);
        assert!((got.re - std::f64::consts::PI.sqrt()).abs() < 1e-12);
        assert_eq!(got.im, 0.0);
    }

    #[test]
    fn integrate_complex_linearity() {
        let g = GridSpec::line(5.0, 501).unwrap();
        let u = SampledFunction::from_fn(g, |x| Complex64::new(x.cos(), x.sin())).unwrap();
        let got = integrate(&u);
        // int cos over symmetric interval = 2 sin(5); int sin = 0.
        assert!((got.re - 2.0 * 5.0_f64.sin()).abs() < 1e-4);
        assert!(got.im.abs() < 1e-12);
    }

    #[test]
    fn shifted_moves_diagonal_only() {
        let g = GridSpec::line(7.5, 16).unwrap();
        let m = build_hamiltonian(&SampledFunction::zero(g));
        let s = m.shifted(Complex64::new(0.0, 3.0));
        assert!((s.diagonal()[5] - Complex64::new(2.0, 3.0)).norm() < 1e-15);
        assert_eq!(s.off_diagonal()[5], m.off_diagonal()[5]);
    }
}
