//! Polynomial potentials with even real and odd imaginary parts:
//! V = a x^(2m) + i b x^(2n+1).
//!
//! These are antilinearly symmetric under combined reflection and
//! conjugation, conj(V(-x)) = V(x), which is the structural reason their
//! spectra can stay real without the potential being real. They are not
//! built from a superpotential; the family exists as an independent
//! reference point for the spectral checks.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{GridSpec, SampledFunction};

pub fn pt_polynomial(
    a: f64,
    b: f64,
    m: u32,
    n: u32,
    grid: GridSpec,
) -> Result<SampledFunction> {
    if m == 0 {
        return Err(Error::InvalidParameter {
            name: "m",
            reason: "the real part needs m >= 1 to confine".into(),
        });
    }
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParameter {
            name: "a",
            reason: "coefficients must be finite".into(),
        });
    }
    let pm = 2 * m as i32;
    let pn = 2 * n as i32 + 1;
    SampledFunction::from_fn(grid, |x| Complex64::new(a * x.powi(pm), b * x.powi(pn)))
}
