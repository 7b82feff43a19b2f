//! Closed-form superpotential families.
//!
//! Each constructor returns the superpotential (with analytic derivative
//! samples attached) together with the partner pair evaluated from the
//! closed-form expressions for that family. The generic construction
//! [`crate::make_partners`] reproduces the stored pair to rounding accuracy;
//! the per-family tests pin that equivalence, and the stored forms keep
//! exact zeros exact (e.g. a transparent family stores V(0) = 0 rather than
//! a rounded difference of large terms).

pub mod constant_part;
pub mod gaussian_model;
pub mod pt_polynomial;
pub mod radial;
pub mod tanh_model;
pub mod transparent;

pub use constant_part::{constant_f, constant_g, BoundedGShape};
pub use gaussian_model::gaussian_model;
pub use pt_polynomial::pt_polynomial;
pub use radial::{radial_quasi_complex, Envelope, RadialBranch};
pub use tanh_model::tanh_model;
pub use transparent::{
    lorentzian_profile, negative_energy, negative_energy_g_profile, positive_energy, zero_energy,
};
