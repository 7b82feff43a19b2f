//! Spectral analysis of sampled potentials: bound-state identification,
//! isospectrality comparison between partners, dissipativity and antilinear
//! symmetry diagnostics, and the centrifugal index of radial potentials.
//!
//! Everything here works on the boxed, discretized problem. A "bound" level
//! is one whose eigenfunction has negligible weight at the box edges and
//! whose real energy sits below the continuum threshold estimated from the
//! potential's boundary values; levels failing that are artifacts of the box
//! and are excluded from spectral claims.

use num_complex::Complex64;

use crate::eigen::eigensolve;
use crate::error::{Error, Result};
use crate::grid::{Domain, SampledFunction};
use crate::operators::build_hamiltonian;
use crate::superpotential::{zero_mode, Supercharge, Superpotential};

/// Edge-weight fraction below which an eigenfunction counts as localized.
pub const EDGE_WEIGHT_BOUND: f64 = 1e-4;

/// One computed level with its bound/box-artifact classification.
#[derive(Debug, Clone)]
pub struct SpectrumEntry {
    pub energy: Complex64,
    /// Normalized eigenfunction (unit trapezoid norm, rotated so the
    /// largest sample is positive real).
    pub function: SampledFunction,
    /// max |psi| over the edge windows divided by max |psi| overall.
    pub edge_fraction: f64,
    /// True when Re E lies below the continuum threshold and the
    /// eigenfunction is localized away from the box edges.
    pub bound: bool,
}

/// The low end of a spectrum, sorted by (Re E, Im E).
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub entries: Vec<SpectrumEntry>,
    /// Estimated continuum edge: the smaller of the two boundary-window
    /// means of Re V. Box-discretized scattering states pile up above it.
    pub continuum_threshold: f64,
}

impl Spectrum {
    pub fn energies(&self) -> Vec<Complex64> {
        self.entries.iter().map(|e| e.energy).collect()
    }

    pub fn bound_energies(&self) -> Vec<Complex64> {
        self.entries
            .iter()
            .filter(|e| e.bound)
            .map(|e| e.energy)
            .collect()
    }
}

/// Compute the lowest `count` levels of -d^2/dx^2 + V with hard walls and
/// classify each as bound or box artifact.
pub fn spectrum(v: &SampledFunction, count: usize) -> Result<Spectrum> {
    let m = build_hamiltonian(v);
    let pairs = eigensolve(&m, count)?;
    let grid = v.grid();
    let win = grid.edge_window();
    let vals = v.values();
    let n = grid.points;
    let left = vals[..win].iter().map(|z| z.re).sum::<f64>() / win as f64;
    let right = vals[n - win..].iter().map(|z| z.re).sum::<f64>() / win as f64;
    let continuum_threshold = left.min(right);
    let entries = pairs
        .into_iter()
        .map(|p| {
            let peak = p.function.max_abs();
            let edge = p.function.max_abs_at_edges();
            let edge_fraction = if peak > 0.0 { edge / peak } else { 1.0 };
            let bound =
                p.value.re < continuum_threshold && edge_fraction <= EDGE_WEIGHT_BOUND;
            SpectrumEntry {
                energy: p.value,
                function: p.function,
                edge_fraction,
                bound,
            }
        })
        .collect();
    Ok(Spectrum {
        entries,
        continuum_threshold,
    })
}

/// Number of bound levels among the lowest `count`.
pub fn count_bound_states(v: &SampledFunction, count: usize) -> Result<usize> {
    Ok(spectrum(v, count)?.entries.iter().filter(|e| e.bound).count())
}

/// A matched pair of levels from two spectra.
#[derive(Debug, Clone, Copy)]
pub struct MatchedLevel {
    pub e0: Complex64,
    pub e1: Complex64,
    pub distance: f64,
}

/// Result of the level-by-level comparison of two spectra.
///
/// Matching is greedy nearest-first in the complex plane, so a level appears
/// either in `matched` or in exactly one of the unmatched lists. Unmatched
/// levels explained by a normalizable supercharge zero mode at the
/// factorization energy are moved to `zero_mode_exceptions` (only
/// [`compare_spectra_with_source`] can do this; without the superpotential
/// the list stays empty).
#[derive(Debug, Clone)]
pub struct IsospectralReport {
    pub matched: Vec<MatchedLevel>,
    pub unmatched_v0: Vec<Complex64>,
    pub unmatched_v1: Vec<Complex64>,
    pub zero_mode_exceptions: Vec<Complex64>,
    pub tolerance: f64,
}

impl IsospectralReport {
    pub fn max_matched_distance(&self) -> f64 {
        self.matched
            .iter()
            .map(|m| m.distance)
            .fold(0.0, f64::max)
    }

    /// Every level on each side found a partner within tolerance.
    pub fn strictly_isospectral(&self) -> bool {
        self.unmatched_v0.is_empty()
            && self.unmatched_v1.is_empty()
            && self.zero_mode_exceptions.is_empty()
    }

    /// As strict, except levels carried by normalizable zero modes may be
    /// missing from the other side.
    pub fn isospectral_up_to_zero_modes(&self) -> bool {
        self.unmatched_v0.is_empty() && self.unmatched_v1.is_empty()
    }
}

/// Greedy nearest-first matching of two level lists at an absolute
/// tolerance. Compare like with like: same number of genuinely present
/// levels on each side, or expect truncation leftovers in the unmatched
/// lists.
pub fn compare_spectra(e0: &[Complex64], e1: &[Complex64], tolerance: f64) -> IsospectralReport {
    let mut candidates = Vec::with_capacity(e0.len() * e1.len());
    for (i, a) in e0.iter().enumerate() {
        for (j, b) in e1.iter().enumerate() {
            let d = (a - b).norm();
            if d <= tolerance {
                candidates.push((d, i, j));
            }
        }
    }
    candidates.sort_by(|a, b| {
        a.0.total_cmp(&b.0)
            .then(a.1.cmp(&b.1))
            .then(a.2.cmp(&b.2))
    });
    let mut used0 = vec![false; e0.len()];
    let mut used1 = vec![false; e1.len()];
    let mut matched = Vec::new();
    for (d, i, j) in candidates {
        if used0[i] || used1[j] {
            continue;
        }
        used0[i] = true;
        used1[j] = true;
        matched.push(MatchedLevel {
            e0: e0[i],
            e1: e1[j],
            distance: d,
        });
    }
    let unmatched_v0 = e0
        .iter()
        .zip(&used0)
        .filter(|(_, &u)| !u)
        .map(|(&e, _)| e)
        .collect();
    let unmatched_v1 = e1
        .iter()
        .zip(&used1)
        .filter(|(_, &u)| !u)
        .map(|(&e, _)| e)
        .collect();
    IsospectralReport {
        matched,
        unmatched_v0,
        unmatched_v1,
        zero_mode_exceptions: Vec::new(),
        tolerance,
    }
}

/// [`compare_spectra`], then reclassify unmatched levels at the
/// factorization energy whose absence from the other side is explained by a
/// normalizable supercharge zero mode: the lowering mode carries an
/// unpaired level of the first partner, the raising mode one of the second.
pub fn compare_spectra_with_source(
    e0: &[Complex64],
    e1: &[Complex64],
    tolerance: f64,
    w: &Superpotential,
) -> IsospectralReport {
    let mut report = compare_spectra(e0, e1, tolerance);
    let eps = w.eps();
    let mut reclassify = |list: &mut Vec<Complex64>, charge: Supercharge| {
        let explained: Vec<usize> = list
            .iter()
            .enumerate()
            .filter(|(_, e)| (*e - eps).norm() <= tolerance)
            .map(|(i, _)| i)
            .collect();
        if explained.is_empty() {
            return;
        }
        if !zero_mode(w, charge).normalizable {
            return;
        }
        for &i in explained.iter().rev() {
            report.zero_mode_exceptions.push(list.remove(i));
        }
    };
    reclassify(&mut report.unmatched_v0, Supercharge::Lowering);
    reclassify(&mut report.unmatched_v1, Supercharge::Raising);
    report
}

/// Estimate of Im E from the eigenfunction density.
#[derive(Debug, Clone, Copy)]
pub struct ImEnergyEstimate {
    /// integral of 2 g' |psi|^2 divided by integral of |psi|^2.
    pub value: f64,
    /// True when the eigenfunction has negligible box-edge weight, so the
    /// dropped boundary flux term cannot shift the estimate.
    pub boundary_negligible: bool,
}

/// Density-weighted average of 2 g', which equals Im E for localized
/// eigenstates of the second partner when the first partner is real: the
/// kinetic part contributes only a boundary term to the imaginary energy,
/// and Im V(1) = 2 g' in that construction.
pub fn im_energy_functional(
    w: &Superpotential,
    psi: &SampledFunction,
) -> Result<ImEnergyEstimate> {
    if psi.grid() != w.grid() {
        return Err(Error::GridMismatch);
    }
    let gp = w.w_prime();
    let h = psi.grid().spacing();
    let n = psi.grid().points;
    let mut num = 0.0;
    let mut den = 0.0;
    for j in 0..n {
        let weight = if j == 0 || j + 1 == n { 0.5 } else { 1.0 };
        let d = psi.values()[j].norm_sqr() * weight * h;
        num += 2.0 * gp.values()[j].im * d;
        den += d;
    }
    let peak = psi.max_abs();
    let boundary_negligible =
        peak > 0.0 && psi.max_abs_at_edges() <= EDGE_WEIGHT_BOUND * peak;
    if den == 0.0 {
        return Err(Error::InvalidParameter {
            name: "psi",
            reason: "zero density; cannot form the average".into(),
        });
    }
    Ok(ImEnergyEstimate {
        value: num / den,
        boundary_negligible,
    })
}

/// Largest deviation from invariance under reflection about `center`
/// combined with complex conjugation: max over nodes of
/// |conj(V(2 center - x)) - V(x)|, with linear interpolation at mirror
/// points that fall between nodes. Nodes whose mirror lands outside the
/// grid are skipped, so for an off-center choice only the overlap is
/// checked.
pub fn pt_symmetry_check(v: &SampledFunction, center: f64) -> f64 {
    let grid = v.grid();
    let xs = grid.nodes();
    let vals = v.values();
    let h = grid.spacing();
    let n = grid.points;
    let x0 = xs[0];
    let x_last = xs[n - 1];
    let snap = 1e-9 * h;
    let mut worst = 0.0_f64;
    for (j, &x) in xs.iter().enumerate() {
        let mirror = 2.0 * center - x;
        if mirror < x0 - snap || mirror > x_last + snap {
            continue;
        }
        let t = ((mirror - x0) / h).clamp(0.0, (n - 1) as f64);
        let i = (t.floor() as usize).min(n - 2);
        let frac = t - i as f64;
        let vm = if frac.abs() * h <= snap {
            vals[i]
        } else if (1.0 - frac).abs() * h <= snap {
            vals[i + 1]
        } else {
            vals[i] * (1.0 - frac) + vals[i + 1] * frac
        };
        worst = worst.max((vm.conj() - vals[j]).norm());
    }
    worst
}

/// Sign diagnosis of the imaginary part of a sampled potential.
#[derive(Debug, Clone, Copy)]
pub struct DissipativityReport {
    pub max_im: f64,
    pub min_im: f64,
    /// True when Im V <= 0 everywhere up to rounding scale.
    pub dissipative: bool,
}

pub fn dissipativity_check(v: &SampledFunction) -> DissipativityReport {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for z in v.values() {
        lo = lo.min(z.im);
        hi = hi.max(z.im);
    }
    DissipativityReport {
        max_im: hi,
        min_im: lo,
        dissipative: hi <= 1e-12 * (1.0 + v.max_abs()),
    }
}

/// Least-squares fit of Re V ~ c / r^2 over the innermost nodes of a
/// half-line potential.
#[derive(Debug, Clone, Copy)]
pub struct CentrifugalFit {
    /// Fitted coefficient c.
    pub strength: f64,
    /// Index l solving c = l (l + 1), when real (c >= -1/4).
    pub index: Option<f64>,
    /// Root-mean-square misfit relative to the potential's own size on the
    /// fit window.
    pub relative_residual: f64,
    /// relative_residual <= 0.1: the window is actually pole-dominated.
    pub reliable: bool,
}

const CENTRIFUGAL_FIT_NODES: usize = 10;

pub fn centrifugal_index(v: &SampledFunction) -> Result<CentrifugalFit> {
    let grid = v.grid();
    if grid.domain != Domain::HalfLine {
        return Err(Error::WrongDomain {
            required: "half_line",
            got: grid.domain.name(),
        });
    }
    let m = CENTRIFUGAL_FIT_NODES.min(grid.points);
    let xs = grid.nodes();
    let vals = v.values();
    let mut num = 0.0;
    let mut den = 0.0;
    for j in 0..m {
        let r2 = xs[j] * xs[j];
        num += vals[j].re / r2;
        den += 1.0 / (r2 * r2);
    }
    let strength = num / den;
    let mut misfit = 0.0;
    let mut size = 0.0;
    for j in 0..m {
        let fit = strength / (xs[j] * xs[j]);
        misfit += (vals[j].re - fit).powi(2);
        size += vals[j].re.powi(2);
    }
    let relative_residual = if size > 0.0 {
        (misfit / size).sqrt()
    } else if misfit > 0.0 {
        f64::INFINITY
    } else {
        0.0
    };
    let disc = 1.0 + 4.0 * strength;
    let index = if disc >= 0.0 {
        Some(0.5 * (-1.0 + disc.sqrt()))
    } else {
        None
    };
    Ok(CentrifugalFit {
        strength,
        index,
        relative_residual,
        reliable: relative_residual <= 0.1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::radial::{radial_quasi_complex, Envelope, RadialBranch};
    use crate::families::tanh_model::tanh_model;
    use crate::families::transparent::zero_energy;
    use crate::grid::GridSpec;
    use crate::superpotential::{make_partners, Superpotential};

    #[test]
    fn shifted_oscillator_levels_are_bound_and_even() {
        let grid = GridSpec::line(10.0, 2001).unwrap();
        let v = SampledFunction::from_real_fn(grid, |x| x * x - 1.0).unwrap();
        let s = spectrum(&v, 3).unwrap();
        assert!(s.continuum_threshold > 80.0);
        for (k, entry) in s.entries.iter().enumerate() {
            let want = 2.0 * k as f64;
            assert!(entry.bound, "level {k} not flagged bound");
            assert!(
                (entry.energy.re - want).abs() < 1e-3,
                "level {k}: {} vs {want}",
                entry.energy.re
            );
            assert!(entry.energy.im.abs() < 1e-8);
        }
    }

    #[test]
    fn shallow_well_has_exactly_one_bound_level() {
        let grid = GridSpec::line(15.0, 1501).unwrap();
        let v = SampledFunction::from_real_fn(grid, |x| -2.0 / x.cosh().powi(2)).unwrap();
        let s = spectrum(&v, 5).unwrap();
        let bound = s.bound_energies();
        assert_eq!(bound.len(), 1, "bound set: {bound:?}");
        assert!((bound[0].re + 1.0).abs() < 1e-3);
        // The rest are box-quantized continuum: delocalized.
        for e in s.entries.iter().filter(|e| !e.bound) {
            assert!(e.edge_fraction > EDGE_WEIGHT_BOUND);
        }
    }

    #[test]
    fn oscillator_partners_match_up_to_the_zero_mode() {
        // W = x: the partners are x^2 -/+ 1 and the lowering mode exp(-x^2/2)
        // carries the unpaired ground level of the first partner.
        let grid = GridSpec::line(10.0, 2001).unwrap();
        let w = Superpotential::from_fns(grid, |x| x, |_| 1.0, |_| 0.0, |_| 0.0, 0.0, 0.0)
            .unwrap();
        let pair = make_partners(&w);
        let s0 = spectrum(&pair.v0, 5).unwrap();
        let s1 = spectrum(&pair.v1, 4).unwrap();
        let b0 = s0.bound_energies();
        let b1 = s1.bound_energies();
        assert_eq!((b0.len(), b1.len()), (5, 4));
        let report = compare_spectra_with_source(&b0, &b1, 1e-3, &w);
        assert_eq!(report.matched.len(), 4);
        assert!(report.max_matched_distance() < 1e-3);
        assert!(report.unmatched_v0.is_empty(), "{:?}", report.unmatched_v0);
        assert!(report.unmatched_v1.is_empty(), "{:?}", report.unmatched_v1);
        assert_eq!(report.zero_mode_exceptions.len(), 1);
        assert!(report.zero_mode_exceptions[0].norm() < 1e-3);
        assert!(report.isospectral_up_to_zero_modes());
        assert!(!report.strictly_isospectral());
        // Without the superpotential the same leftover stays unmatched.
        let plain = compare_spectra(&b0, &b1, 1e-3);
        assert_eq!(plain.unmatched_v0.len(), 1);
        assert!(plain.zero_mode_exceptions.is_empty());
    }

    #[test]
    fn dissipative_level_matches_the_density_functional() {
        // alpha beta < 0: the second partner absorbs; its single localized
        // level sits at eps_r + i alpha beta and the density average of
        // 2 g' reproduces that imaginary part. The mode decays like
        // exp(-|x|/2), so the box must reach ~24 for the edge window to see
        // less than 1e-4 of the peak.
        let grid = GridSpec::line(24.0, 2001).unwrap();
        let (alpha, beta) = (1.0, -0.3);
        let (w, pair) = tanh_model(alpha, beta, 0.0, grid).unwrap();
        let s1 = spectrum(&pair.v1, 3).unwrap();
        let bound: Vec<&SpectrumEntry> =
            s1.entries.iter().filter(|e| e.bound).collect();
        assert_eq!(bound.len(), 1);
        let level = bound[0];
        assert!((level.energy.im - alpha * beta).abs() < 1e-3);
        assert!((level.energy.re - 0.0).abs() < 1e-3);
        let est = im_energy_functional(&w, &level.function).unwrap();
        assert!(est.boundary_negligible);
        // The discrete identity is exact up to the trapezoid end weights.
        assert!(
            (est.value - level.energy.im).abs() < 1e-8,
            "{} vs {}",
            est.value,
            level.energy.im
        );
        let report = dissipativity_check(&pair.v1);
        assert!(report.dissipative);
        assert!(level.energy.im >= report.min_im - 1e-9);
        assert!(level.energy.im <= report.max_im + 1e-9);
    }

    #[test]
    fn reflection_conjugation_residuals() {
        // The zero-energy transparent potential is invariant under
        // reflection about -b with conjugation; mirror nodes land on nodes.
        let grid = GridSpec::line(10.0, 2001).unwrap();
        let (_, pair) = zero_energy(1.0, 0.5, grid).unwrap();
        let good = pt_symmetry_check(&pair.v1, -0.5);
        assert!(good < 1e-12, "residual {good:.3e}");
        let bad = pt_symmetry_check(&pair.v1, 0.3);
        assert!(bad > 0.01, "off-center residual {bad:.3e}");

        // An even-real/odd-imaginary failure case: V = x^3 + i x about 0
        // misses by exactly 2 x^3.
        let grid2 = GridSpec::line(5.0, 1001).unwrap();
        let v = SampledFunction::from_fn(grid2, |x| Complex64::new(x * x * x, x)).unwrap();
        let got = pt_symmetry_check(&v, 0.0);
        assert!((got - 250.0).abs() < 1e-8, "got {got}");
    }

    #[test]
    fn centrifugal_fit_recovers_both_partner_indices() {
        let grid = GridSpec::half_line(20.0, 2000).unwrap();
        let l0 = 1u32;
        let (_, pair) = radial_quasi_complex(
            l0,
            0.0,
            2.0 * l0 as f64 + 3.0,
            RadialBranch::Physical,
            Envelope::Rational { m: 1 },
            None,
            grid,
        )
        .unwrap();
        let fit0 = centrifugal_index(&pair.v0).unwrap();
        let fit1 = centrifugal_index(&pair.v1).unwrap();
        assert!(fit0.reliable && fit1.reliable);
        let l0f = fit0.index.expect("pole strength above the critical value");
        let l1f = fit1.index.expect("pole strength above the critical value");
        assert!((l0f - 1.0).abs() < 1e-3, "first partner index {l0f}");
        assert!((l1f - 2.0).abs() < 1e-3, "second partner index {l1f}");
        // A flat potential on the half line is reliably pole-free.
        let flat = SampledFunction::from_real_fn(grid, |_| 1.0).unwrap();
        let fit = centrifugal_index(&flat).unwrap();
        assert!(fit.strength.abs() < 1e-3);
        // And the whole-line domain is rejected.
        let line = SampledFunction::from_real_fn(GridSpec::line(5.0, 101).unwrap(), |_| 1.0)
            .unwrap();
        assert!(centrifugal_index(&line).is_err());
    }
}
