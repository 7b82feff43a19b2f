//! End-to-end acceptance suite: nine numbered criteria, one test each.
//!
//! Every test prints a single line
//!
//! ```text
//!   criterion N (name): PASS|FAIL — measured values vs. their bars
//! ```
//!
//! (run with `--nocapture` to see the PASS lines; FAIL lines appear in the
//! failure report) and then asserts the verdict, so the suite is green
//! exactly when every criterion holds.
//!
//! Criterion 2 fails by design of its stated box. The zero-energy
//! transparent profile has 1/x^2 tails, and truncating those at |x| = 30
//! leaves a reflection floor near 1e-2 at the low-wavenumber end of the
//! scan — an analytic property of the profile, not a solver artifact. The
//! test measures that floor, points at the box size that does pass (the
//! scattering unit tests demonstrate max |R| < 1e-6 on a box of 17000), and
//! fails honestly rather than widening the bar or shrinking the scan.

use num_complex::Complex64;
use susyqm::analysis::{
    centrifugal_index, compare_spectra_with_source, count_bound_states, dissipativity_check,
    spectrum,
};
use susyqm::families::{
    gaussian_model, lorentzian_profile, negative_energy, negative_energy_g_profile, pt_polynomial,
    radial_quasi_complex, tanh_model, zero_energy, Envelope, RadialBranch,
};
use susyqm::scattering::{transparency_scan, transparency_scan_with};
use susyqm::superpotential::{
    identity_residuals, random_smooth_superpotential, smooth_probe,
};
use susyqm::transmission::{transmission_reflection, ScatterOptions};
use susyqm::{make_partners, GridSpec, SampledFunction};

/// Print the one-line verdict, then enforce it.
fn verdict(number: u32, name: &str, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    let line = format!("criterion {number} ({name}): {tag} — {detail}");
    println!("{line}");
    assert!(pass, "{line}");
}

#[test]
fn criterion_1_operator_identities() {
    let grid = GridSpec::line(10.0, 2000).unwrap();
    let mut worst_ratio = 0.0_f64;
    for seed in 0..20 {
        let w = random_smooth_superpotential(grid, seed);
        let pair = make_partners(&w);
        let psi = smooth_probe(grid, 1000 + seed);
        let r = identity_residuals(&w, &pair, &psi).unwrap();
        worst_ratio = worst_ratio.max(r.max() / r.scale);
    }
    verdict(
        1,
        "operator identities",
        worst_ratio < 1e-6,
        &format!(
            "20 random smooth superpotentials on [-10, 10] with N = 2000: worst \
             factorization/intertwining residual = {worst_ratio:.2e} of the probe scale \
             (bar 1e-6)"
        ),
    );
}

#[test]
fn criterion_2_transparent_pairs() {
    let grid = GridSpec::line(30.0, 4000).unwrap();
    let n_k = 9; // log-spaced wavenumbers in [0.3, 3]

    // Negative-energy profile: exponential tails, so the box is ample.
    let (_, deep) = negative_energy(-1.0, 0.3, 0.0, grid).unwrap();
    let deep_scan = transparency_scan(&deep.v1, 0.3, 3.0, n_k, 1e-3).unwrap();
    let bound = spectrum(&deep.v1, 4).unwrap().bound_energies();
    let bound_ok =
        bound.len() == 1 && (bound[0].re + 1.0).abs() < 1e-4 && bound[0].im.abs() < 1e-5;
    let bound_txt = if bound.len() == 1 {
        format!(
            "one bound level at {:.6} {:+.2e} i (want -1, bars 1e-4 and 1e-5)",
            bound[0].re, bound[0].im
        )
    } else {
        format!("{} bound levels (want exactly one)", bound.len())
    };

    // Zero-energy profile: 1/x^2 tails. The strict scan refuses the march
    // because the potential has not decayed at the box edge; forcing it
    // through anyway measures the reflection floor that truncation leaves.
    let (_, slow) = zero_energy(1.0, 0.0, grid).unwrap();
    let strict = transparency_scan(&slow.v1, 0.3, 3.0, n_k, 1e-3);
    let forced = transparency_scan_with(
        &slow.v1,
        0.3,
        3.0,
        n_k,
        1e-3,
        ScatterOptions {
            decay_threshold: f64::INFINITY,
        },
    )
    .unwrap();
    let slow_ok = matches!(&strict, Ok(r) if r.transparent);
    let strict_txt = match &strict {
        Ok(r) => format!("strict scan ran, max |R| = {:.2e}", r.max_reflection),
        Err(e) => format!("strict scan refused: {e}"),
    };

    verdict(
        2,
        "transparent pairs",
        deep_scan.transparent && bound_ok && slow_ok,
        &format!(
            "negative-energy profile: max |R| = {:.2e}, max ||T|-1| = {:.2e} (bars 1e-3), \
             {bound_txt}; zero-energy profile on the same box: {strict_txt}; forcing the march \
             gives max |R| = {:.2e} against the same 1e-3 bar. The second profile decays like \
             1/x^2, so truncation at |x| = 30 leaves ~1e-2 reflection at the low-k end no \
             matter how fine the grid; the identical scan passes with max |R| < 1e-6 once the \
             box reaches 17000 (demonstrated in the scattering unit tests).",
            deep_scan.max_reflection, deep_scan.max_transmission_defect, forced.max_reflection,
        ),
    );
}

#[test]
fn criterion_3_quasi_complex_reality() {
    let grid = GridSpec::line(8.0, 4000).unwrap();
    let (w, pair) = gaussian_model(1, 1.0, 1.0, 0.0, grid).unwrap();

    let e1 = spectrum(&pair.v1, 6).unwrap().energies();
    let max_im = e1.iter().map(|e| e.im.abs()).fold(0.0, f64::max);

    let e0 = spectrum(&pair.v0, 5).unwrap().energies();
    let report = compare_spectra_with_source(&e0, &e1, 1e-4, &w);
    let pass = max_im < 1e-4
        && report.isospectral_up_to_zero_modes()
        && report.matched.len() == 5
        && report.zero_mode_exceptions.len() <= 1;

    verdict(
        3,
        "quasi-complex reality",
        pass,
        &format!(
            "six lowest levels of the complex partner have max |Im E| = {max_im:.2e} (bar 1e-4); \
             {} level pairs matched across the partners within 1e-4 (worst gap {:.2e}); \
             {} unpaired level(s), explained by a normalizable supercharge zero mode at \
             |E| = {:.2e}",
            report.matched.len(),
            report.max_matched_distance(),
            report.zero_mode_exceptions.len(),
            report
                .zero_mode_exceptions
                .first()
                .map(|e| e.norm())
                .unwrap_or(f64::NAN),
        ),
    );
}

#[test]
fn criterion_4_tanh_closed_forms() {
    let grid = GridSpec::line(10.0, 2000).unwrap();
    let eps_r = 0.25;
    let sqrt3 = 3.0_f64.sqrt();

    // (a) The generated first partner against the closed form, evaluated
    // here independently through 1/cosh^2.
    let mut worst_dev = 0.0_f64;
    for &(alpha, beta) in &[(1.0, 1.0), (2.0, sqrt3), (-1.0, 2.0)] {
        let (w, _) = tanh_model(alpha, beta, eps_r, grid).unwrap();
        let generated = make_partners(&w);
        for (j, &x) in grid.nodes().iter().enumerate() {
            let c = (alpha * x).cosh();
            let sech2 = 1.0 / (c * c);
            let want = eps_r + 0.25 * alpha * alpha - beta * beta
                + (0.25 * alpha * alpha + beta * beta) * sech2;
            let z = generated.v0.values()[j];
            worst_dev = worst_dev.max((z.re - want).abs()).max(z.im.abs());
        }
    }

    // (b) beta = (sqrt(3)/2) alpha: the second partner's real part is flat.
    let (w_flat, _) = tanh_model(2.0, sqrt3, eps_r, grid).unwrap();
    let flat = make_partners(&w_flat).v1;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for z in flat.values() {
        lo = lo.min(z.re);
        hi = hi.max(z.re);
    }
    let spread = hi - lo;

    // (c) Opposite signs: the second partner absorbs everywhere and the
    // first partner is a real barrier with no bound states.
    let (w_dis, pair_dis) = tanh_model(1.5, -0.4, eps_r, grid).unwrap();
    let dis = dissipativity_check(&pair_dis.v1);
    let generated_im_max = make_partners(&w_dis)
        .v1
        .values()
        .iter()
        .map(|z| z.im)
        .fold(f64::NEG_INFINITY, f64::max);
    let n_bound = count_bound_states(&pair_dis.v0, 4).unwrap();

    let pass = worst_dev < 1e-10
        && spread < 1e-10
        && dis.dissipative
        && generated_im_max <= 1e-12
        && n_bound == 0;
    verdict(
        4,
        "tanh closed forms",
        pass,
        &format!(
            "three parameter sets: generated first partner off the closed form by at most \
             {worst_dev:.2e} (bar 1e-10); special-ratio partner real part has spread \
             {spread:.2e} (bar 1e-10); opposite-sign variant has Im V <= {:.2e} everywhere \
             (generated: {generated_im_max:.2e}) and {n_bound} bound state(s) on the real \
             side (want 0)",
            dis.max_im,
        ),
    );
}

#[test]
fn criterion_5_dissipative_spectra() {
    let grid = GridSpec::line(24.0, 2400).unwrap();
    let mut total_bound = 0usize;
    let mut worst_im = f64::NEG_INFINITY;
    let mut every_variant_confines = true;
    for j in 0..10 {
        let alpha = 1.0 + 0.1 * j as f64;
        let beta = -0.25 * alpha;
        let (_, pair) = tanh_model(alpha, beta, 0.1, grid).unwrap();
        let bound = spectrum(&pair.v1, 3).unwrap().bound_energies();
        every_variant_confines &= !bound.is_empty();
        total_bound += bound.len();
        for e in &bound {
            worst_im = worst_im.max(e.im);
        }
    }
    verdict(
        5,
        "dissipative bound levels",
        every_variant_confines && worst_im <= 1e-5,
        &format!(
            "10 absorbing tanh variants (alpha in [1.0, 1.9] step 0.1, beta = -alpha/4): \
             {total_bound} bound level(s) found, every variant at least one; largest \
             Im E = {worst_im:.3e} (bar 1e-5; decay means Im E < 0)"
        ),
    );
}

#[test]
fn criterion_6_radial_centrifugal_indices() {
    let grid = GridSpec::half_line(20.0, 2000).unwrap();
    let mut worst_first = 0.0_f64;
    let mut worst_second = 0.0_f64;
    let mut worst_im = 0.0_f64;
    let mut all_defined = true;
    let mut stored_real = true;
    for l0 in 0..=2u32 {
        let eps_i = 2.0 * l0 as f64 + 3.0; // linear-profile amplitude = 1
        let (w, pair) = radial_quasi_complex(
            l0,
            0.0,
            eps_i,
            RadialBranch::Physical,
            Envelope::Rational { m: 1 },
            None,
            grid,
        )
        .unwrap();
        let fit0 = centrifugal_index(&pair.v0).unwrap();
        let fit1 = centrifugal_index(&pair.v1).unwrap();
        match (fit0.index, fit1.index) {
            (Some(i0), Some(i1)) => {
                worst_first = worst_first.max((i0 - l0 as f64).abs());
                worst_second = worst_second.max((i1 - (l0 as f64 + 1.0)).abs());
            }
            _ => all_defined = false,
        }
        stored_real &= pair.v0.values().iter().all(|z| z.im == 0.0);
        let generated_im = make_partners(&w)
            .v0
            .values()
            .iter()
            .map(|z| z.im.abs())
            .fold(0.0, f64::max);
        worst_im = worst_im.max(generated_im);
    }
    let pass =
        all_defined && stored_real && worst_first < 0.05 && worst_second < 0.05 && worst_im < 1e-10;
    verdict(
        6,
        "radial centrifugal indices",
        pass,
        &format!(
            "l0 in {{0, 1, 2}}, physical branch: fitted index off by at most {worst_first:.2e} \
             on the real side and {worst_second:.2e} on the partner (bar 0.05); real side is \
             stored exactly real ({stored_real}) and the generated one peaks at \
             |Im V| = {worst_im:.2e} (bar 1e-10)"
        ),
    );
}

/// Closed-form R and T for the square well V = v0 on |x| < a (v0 < k^2),
/// from plane-wave matching at x = +-a, in the marcher's phase convention.
fn square_well_exact(k: f64, a: f64, v0: f64) -> (Complex64, Complex64) {
    let q = (k * k - v0).sqrt();
    let i = Complex64::new(0.0, 1.0);
    let t = (-2.0 * i * k * a).exp()
        / (Complex64::new((2.0 * q * a).cos(), 0.0)
            - 0.5 * i * (k / q + q / k) * (2.0 * q * a).sin());
    let r = 0.5 * i * (q / k - k / q) * (2.0 * q * a).sin() * t;
    (r, t)
}

#[test]
fn criterion_7_solver_calibration() {
    // Harmonic oscillator: levels 2n + 1.
    let grid_h = GridSpec::line(8.0, 4000).unwrap();
    let vh = SampledFunction::from_real_fn(grid_h, |x| x * x).unwrap();
    let eh = spectrum(&vh, 5).unwrap().energies();
    let mut harmonic_err = 0.0_f64;
    for (n, e) in eh.iter().enumerate() {
        let want = 2.0 * n as f64 + 1.0;
        harmonic_err = harmonic_err.max((e.re - want).abs()).max(e.im.abs());
    }

    // Reflectionless well: exactly one level, at exactly -1.
    let grid_w = GridSpec::line(15.0, 3000).unwrap();
    let vw = SampledFunction::from_real_fn(grid_w, |x| {
        let c = x.cosh();
        -2.0 / (c * c)
    })
    .unwrap();
    let wells = spectrum(&vw, 4).unwrap().bound_energies();
    let well_err = wells
        .iter()
        .map(|e| (e + 1.0).norm())
        .fold(0.0_f64, f64::max);
    let well_ok = wells.len() == 1 && well_err < 1e-4;

    // Square well scattering against the analytic matching formulas. Jump
    // nodes take the mean value so the march stays second order.
    let grid_s = GridSpec::line(5.0, 16001).unwrap();
    let (a, v0) = (1.0, -1.0);
    let h = grid_s.spacing();
    let vs = SampledFunction::from_real_fn(grid_s, |x| {
        if (x.abs() - a).abs() < 0.25 * h {
            0.5 * v0
        } else if x.abs() < a {
            v0
        } else {
            0.0
        }
    })
    .unwrap();
    let mut scatter_err = 0.0_f64;
    for &k in &[0.5, 1.0, 2.0] {
        let got = transmission_reflection(&vs, k).unwrap();
        let (r_want, t_want) = square_well_exact(k, a, v0);
        scatter_err = scatter_err
            .max((got.reflection - r_want).norm())
            .max((got.transmission - t_want).norm());
    }

    let pass = harmonic_err < 1e-4 && well_ok && scatter_err < 1e-6;
    verdict(
        7,
        "solver calibration",
        pass,
        &format!(
            "harmonic levels off by at most {harmonic_err:.2e} (bar 1e-4); shallow-well level \
             count {} (want 1) off by {well_err:.2e} (bar 1e-4); square-well R and T off the \
             closed forms by at most {scatter_err:.2e} (bar 1e-6)",
            wells.len(),
        ),
    );
}

#[test]
fn criterion_8_cubic_imaginary_confinement() {
    let grid = GridSpec::line(8.0, 2000).unwrap();
    let v = pt_polynomial(1.0, 1.0, 1, 1, grid).unwrap();
    let energies = spectrum(&v, 4).unwrap().energies();
    let max_im = energies.iter().map(|e| e.im.abs()).fold(0.0, f64::max);
    let increasing = energies.windows(2).all(|p| p[1].re > p[0].re);
    let re_list = energies
        .iter()
        .map(|e| format!("{:.4}", e.re))
        .collect::<Vec<_>>()
        .join(", ");
    verdict(
        8,
        "cubic-imaginary confinement",
        max_im < 1e-3 && increasing,
        &format!(
            "lowest four levels of x^2 + i x^3: Re E = [{re_list}] (strictly increasing: \
             {increasing}), max |Im E| = {max_im:.2e} (bar 1e-3)"
        ),
    );
}

#[test]
fn criterion_9_profile_limit() {
    let grid = GridSpec::line(30.0, 4000).unwrap();
    let eps_r = -1e-4;
    let near = negative_energy_g_profile(eps_r, 1.0, 0.0, grid).unwrap();
    let limit = lorentzian_profile(1.0, 0.0, grid).unwrap();
    let deviation = near.zip(&limit, |a, b| a - b).unwrap().max_abs();
    verdict(
        9,
        "profile limit",
        deviation < 1e-3,
        &format!(
            "bounded profile at energy {eps_r} sits within {deviation:.2e} of the zero-energy \
             Lorentzian everywhere on the box (bar 1e-3)"
        ),
    );
}
