//! Wavenumber scans of the scattering coefficients, with a transparency
//! verdict.
//!
//! A potential is declared transparent over a scan when both the largest
//! reflection magnitude and the largest deviation of |T| from one stay below
//! the caller's threshold. The threshold carries the whole burden of
//! numerical honesty: it must sit above the discretization floor of the
//! marching integrator (O(h^2) from midpoint sampling) and above whatever
//! the truncated potential tails contribute.

use crate::error::{Error, Result};
use crate::grid::SampledFunction;
use crate::transmission::{
    transmission_reflection_with, ScatterOptions, ScatteringCoefficients,
};

/// Coefficients at one wavenumber together with the two transparency
/// figures of merit.
#[derive(Debug, Clone, Copy)]
pub struct TransparencyPoint {
    pub coefficients: ScatteringCoefficients,
    /// |R(k)|.
    pub reflection_magnitude: f64,
    /// | |T(k)| - 1 |.
    pub transmission_defect: f64,
}

/// Scan summary: worst reflection and worst modulus defect over the grid
/// of wavenumbers.
#[derive(Debug, Clone)]
pub struct TransparencyReport {
    pub points: Vec<TransparencyPoint>,
    pub max_reflection: f64,
    pub max_transmission_defect: f64,
    /// The acceptance bar the maxima were compared against.
    pub threshold: f64,
    pub transparent: bool,
}

/// Scattering coefficients at each of the given wavenumbers.
pub fn scatter(v: &SampledFunction, ks: &[f64]) -> Result<Vec<ScatteringCoefficients>> {
    scatter_with(v, ks, ScatterOptions::default())
}

pub fn scatter_with(
    v: &SampledFunction,
    ks: &[f64],
    opts: ScatterOptions,
) -> Result<Vec<ScatteringCoefficients>> {
    ks.iter()
        .map(|&k| transmission_reflection_with(v, k, &opts))
        .collect()
}

/// Log-spaced wavenumbers between `k_min` and `k_max` inclusive.
pub fn log_spaced_wavenumbers(k_min: f64, k_max: f64, count: usize) -> Result<Vec<f64>> {
    if !(k_min.is_finite() && k_max.is_finite()) || k_min <= 0.0 || k_max < k_min {
        return Err(Error::InvalidParameter {
            name: "k_min",
            reason: format!("need 0 < k_min <= k_max, got [{k_min}, {k_max}]"),
        });
    }
    if count == 0 {
        return Err(Error::InvalidParameter {
            name: "count",
            reason: "need at least one wavenumber".into(),
        });
    }
    if count == 1 {
        return Ok(vec![k_min]);
    }
    let ratio = k_max / k_min;
    Ok((0..count)
        .map(|i| k_min * ratio.powf(i as f64 / (count - 1) as f64))
        .collect())
}

/// Scan |R| and |T| over log-spaced wavenumbers and compare against a
/// transparency threshold.
pub fn transparency_scan(
    v: &SampledFunction,
    k_min: f64,
    k_max: f64,
    count: usize,
    threshold: f64,
) -> Result<TransparencyReport> {
    transparency_scan_with(v, k_min, k_max, count, threshold, ScatterOptions::default())
}

pub fn transparency_scan_with(
    v: &SampledFunction,
    k_min: f64,
    k_max: f64,
    count: usize,
    threshold: f64,
    opts: ScatterOptions,
) -> Result<TransparencyReport> {
    if !(threshold.is_finite() && threshold > 0.0) {
        return Err(Error::InvalidParameter {
            name: "threshold",
            reason: format!("need a positive transparency bar, got {threshold}"),
        });
    }
    let ks = log_spaced_wavenumbers(k_min, k_max, count)?;
    let mut points = Vec::with_capacity(ks.len());
    let mut max_reflection = 0.0_f64;
    let mut max_transmission_defect = 0.0_f64;
    for &k in &ks {
        let coefficients = transmission_reflection_with(v, k, &opts)?;
        let reflection_magnitude = coefficients.reflection.norm();
        let transmission_defect = (coefficients.transmission.norm() - 1.0).abs();
        max_reflection = max_reflection.max(reflection_magnitude);
        max_transmission_defect = max_transmission_defect.max(transmission_defect);
        points.push(TransparencyPoint {
            coefficients,
            reflection_magnitude,
            transmission_defect,
        });
    }
    Ok(TransparencyReport {
        points,
        max_reflection,
        max_transmission_defect,
        threshold,
        transparent: max_reflection <= threshold && max_transmission_defect <= threshold,
    })
}
