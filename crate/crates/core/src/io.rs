//! Serialization documents and plain-text table emitters.
//!
//! The JSON documents are deliberately flat: real arrays only, split into
//! re/im columns, so any plotting tool can consume them without a complex
//! number convention. A pair document round-trips through
//! [`PairDocument::to_superpotential`] without analytic derivatives, so
//! downstream identity checks behave identically whether the pair came from
//! a builtin family or from a file.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::analysis::Spectrum;
use crate::error::{Error, Result};
use crate::grid::{GridSpec, SampledFunction};
use crate::scattering::TransparencyReport;
use crate::superpotential::{PotentialPair, Superpotential};

/// A superpotential and its partner pair, ready for JSON.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PairDocument {
    pub grid: GridSpec,
    pub eps_r: f64,
    pub eps_i: f64,
    pub f: Vec<f64>,
    pub g: Vec<f64>,
    pub v0_re: Vec<f64>,
    pub v0_im: Vec<f64>,
    pub v1_re: Vec<f64>,
    pub v1_im: Vec<f64>,
}

impl PairDocument {
    pub fn new(w: &Superpotential, pair: &PotentialPair) -> Result<Self> {
        if w.grid() != pair.grid() {
            return Err(Error::GridMismatch);
        }
        Ok(PairDocument {
            grid: w.grid(),
            eps_r: w.eps_r(),
            eps_i: w.eps_i(),
            f: w.f().to_vec(),
            g: w.g().to_vec(),
            v0_re: pair.v0.real_values(),
            v0_im: pair.v0.imag_values(),
            v1_re: pair.v1.real_values(),
            v1_im: pair.v1.imag_values(),
        })
    }

    /// Rebuild the superpotential with discrete derivatives only, so
    /// identity checks run the same whether the data came from a builtin
    /// family or a file.
    pub fn to_superpotential(&self) -> Result<Superpotential> {
        Superpotential::from_samples(
            self.grid,
            self.f.clone(),
            self.g.clone(),
            self.eps_r,
            self.eps_i,
        )
    }

    pub fn to_pair(&self) -> Result<PotentialPair> {
        let combine = |re: &[f64], im: &[f64]| -> Result<SampledFunction> {
            if re.len() != im.len() {
                return Err(Error::MalformedDocument(format!(
                    "re/im columns disagree: {} vs {}",
                    re.len(),
                    im.len()
                )));
            }
            SampledFunction::from_values(
                self.grid,
                re.iter()
                    .zip(im)
                    .map(|(&r, &i)| Complex64::new(r, i))
                    .collect(),
            )
        };
        Ok(PotentialPair {
            v0: combine(&self.v0_re, &self.v0_im)?,
            v1: combine(&self.v1_re, &self.v1_im)?,
        })
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::MalformedDocument(e.to_string()))
    }

    pub fn to_json_string(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::MalformedDocument(e.to_string()))
    }
}

/// Spectrum in column form.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SpectrumDocument {
    pub continuum_threshold: f64,
    pub energy_re: Vec<f64>,
    pub energy_im: Vec<f64>,
    pub bound: Vec<bool>,
    pub edge_fraction: Vec<f64>,
}

impl SpectrumDocument {
    pub fn new(s: &Spectrum) -> Self {
        SpectrumDocument {
            continuum_threshold: s.continuum_threshold,
            energy_re: s.entries.iter().map(|e| e.energy.re).collect(),
            energy_im: s.entries.iter().map(|e| e.energy.im).collect(),
            bound: s.entries.iter().map(|e| e.bound).collect(),
            edge_fraction: s.entries.iter().map(|e| e.edge_fraction).collect(),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::MalformedDocument(e.to_string()))
    }

    pub fn to_json_string(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::MalformedDocument(e.to_string()))
    }
}

/// Transparency scan in column form.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TransparencyDocument {
    pub threshold: f64,
    pub max_reflection: f64,
    pub max_transmission_defect: f64,
    pub transparent: bool,
    pub k: Vec<f64>,
    pub reflection_re: Vec<f64>,
    pub reflection_im: Vec<f64>,
    pub transmission_re: Vec<f64>,
    pub transmission_im: Vec<f64>,
}

impl TransparencyDocument {
    pub fn new(r: &TransparencyReport) -> Self {
        TransparencyDocument {
            threshold: r.threshold,
            max_reflection: r.max_reflection,
            max_transmission_defect: r.max_transmission_defect,
            transparent: r.transparent,
            k: r.points.iter().map(|p| p.coefficients.k).collect(),
            reflection_re: r.points.iter().map(|p| p.coefficients.reflection.re).collect(),
            reflection_im: r.points.iter().map(|p| p.coefficients.reflection.im).collect(),
            transmission_re: r
                .points
                .iter()
                .map(|p| p.coefficients.transmission.re)
                .collect(),
            transmission_im: r
                .points
                .iter()
                .map(|p| p.coefficients.transmission.im)
                .collect(),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::MalformedDocument(e.to_string()))
    }

    pub fn to_json_string(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::MalformedDocument(e.to_string()))
    }
}

/// CSV table of a pair: x, the two potentials, then the superpotential parts.
pub fn pair_csv(doc: &PairDocument) -> String {
    let xs = doc.grid.nodes();
    let mut out = String::from("x,v0_re,v0_im,v1_re,v1_im,f,g\n");
    for j in 0..doc.grid.points {
        out.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
            xs[j], doc.v0_re[j], doc.v0_im[j], doc.v1_re[j], doc.v1_im[j], doc.f[j], doc.g[j]
        ));
    }
    out
}

/// CSV table of a spectrum: index, energy_re, energy_im, bound, edge_fraction.
pub fn spectrum_csv(doc: &SpectrumDocument) -> String {
    let mut out = String::from("index,energy_re,energy_im,bound,edge_fraction\n");
    for j in 0..doc.energy_re.len() {
        out.push_str(&format!(
            "{},{:.16e},{:.16e},{},{:.16e}\n",
            j, doc.energy_re[j], doc.energy_im[j], doc.bound[j], doc.edge_fraction[j]
        ));
    }
    out
}

/// CSV table of a scan: k, reflection and transmission columns with moduli.
pub fn transparency_csv(doc: &TransparencyDocument) -> String {
    let mut out = String::from(
        "k,reflection_re,reflection_im,reflection_abs,transmission_re,transmission_im,transmission_abs\n",
    );
    for j in 0..doc.k.len() {
        let r = Complex64::new(doc.reflection_re[j], doc.reflection_im[j]);
        let t = Complex64::new(doc.transmission_re[j], doc.transmission_im[j]);
        out.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
            doc.k[j],
            r.re,
            r.im,
            r.norm(),
            t.re,
            t.im,
            t.norm()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::spectrum;
    use crate::families::tanh_model::tanh_model;
    use crate::scattering::transparency_scan;

    fn sample_doc() -> PairDocument {
        let grid = GridSpec::line(8.0, 101).unwrap();
        let (w, pair) = tanh_model(1.0, 0.5, 0.2, grid).unwrap();
        PairDocument::new(&w, &pair).unwrap()
    }

    #[test]
    fn pair_document_round_trips_bitwise() {
        let doc = sample_doc();
        let json = doc.to_json_string().unwrap();
        let back = PairDocument::from_json_str(&json).unwrap();
        assert_eq!(doc, back);
        let w = back.to_superpotential().unwrap();
        assert_eq!(w.f(), &doc.f[..]);
        assert_eq!(w.g(), &doc.g[..]);
        assert_eq!(w.eps_r(), 0.2);
        let pair = back.to_pair().unwrap();
        assert_eq!(pair.v0.real_values(), doc.v0_re);
        assert_eq!(pair.v1.imag_values(), doc.v1_im);
    }

    #[test]
    fn malformed_documents_are_reported() {
        assert!(matches!(
            PairDocument::from_json_str("{not json"),
            Err(Error::MalformedDocument(_))
        ));
        // Wrong column lengths surface on reconstruction.
        let mut doc = sample_doc();
        doc.v1_im.pop();
        assert!(doc.to_pair().is_err());
        let mut doc2 = sample_doc();
        doc2.f.pop();
        assert!(doc2.to_superpotential().is_err());
    }

    #[test]
    fn csv_tables_have_full_rows() {
        let doc = sample_doc();
        let table = pair_csv(&doc);
        let lines: Vec<&str> = table.trim_end().lines().collect();
        assert_eq!(lines.len(), 102);
        assert_eq!(lines[0], "x,v0_re,v0_im,v1_re,v1_im,f,g");
        assert!(lines[1].split(',').count() == 7);
        // Full precision: parse a cell back and compare bitwise.
        let cell: f64 = lines[51].split(',').nth(5).unwrap().parse().unwrap();
        assert_eq!(cell, doc.f[50]);
    }

    #[test]
    fn spectrum_and_scan_documents_serialize() {
        let grid = GridSpec::line(10.0, 401).unwrap();
        let v = SampledFunction::from_real_fn(grid, |x| x * x).unwrap();
        let s = spectrum(&v, 3).unwrap();
        let sdoc = SpectrumDocument::new(&s);
        let back = SpectrumDocument::from_json_str(&sdoc.to_json_string().unwrap()).unwrap();
        assert_eq!(sdoc, back);
        assert_eq!(back.bound, vec![true, true, true]);
        let table = spectrum_csv(&sdoc);
        assert_eq!(table.lines().count(), 4);

        let free = SampledFunction::zero(grid);
        let report = transparency_scan(&free, 0.5, 1.0, 3, 1e-6).unwrap();
        let tdoc = TransparencyDocument::new(&report);
        let tback =
            TransparencyDocument::from_json_str(&tdoc.to_json_string().unwrap()).unwrap();
        assert_eq!(tdoc, tback);
        let table = transparency_csv(&tdoc);
        assert_eq!(table.lines().count(), 4);
        assert!(table.starts_with("k,"));
    }
}
