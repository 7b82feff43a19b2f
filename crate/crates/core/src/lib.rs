//! Numerical toolkit for one-dimensional supersymmetric quantum mechanics with
//! complex superpotentials.
//!
//! A superpotential W(x) = f(x) + i g(x) generates a pair of partner potentials
//!
//! ```text
//!   V(0) = -W' + W^2 + eps        V(1) = +W' + W^2 + eps
//! ```
//!
//! whose Hamiltonians H = -d^2/dx^2 + V (units hbar = 2m = 1) factorize as
//! H(0) = q+ q- + eps and H(1) = q- q+ + eps with q± = ∓d/dx + W, and are
//! intertwined: H(0) q+ = q+ H(1). Even when W is complex and the partners are
//! non-hermitian, the intertwining forces their spectra to coincide up to
//! zero modes of q±, and particular choices of f and g yield potentials that
//! are real on one side (quasi-complex), strictly transparent, or dissipative
//! with purely real bound-state energies.
//!
//! The crate builds these pairs on finite-difference grids, solves the
//! resulting complex-symmetric tridiagonal eigenproblems directly, computes
//! transmission/reflection coefficients by marching the scattering solution
//! across the grid, and packages the spectral and scattering diagnostics the
//! claims above call for.

pub mod analysis;
pub mod eigen;
pub mod error;
pub mod families;
pub mod grid;
pub mod io;
pub mod operators;
mod rng;
pub mod scattering;
pub mod superpotential;
pub mod transmission;

pub use error::{Error, Result};
pub use grid::{Domain, GridSpec, SampledFunction};
pub use operators::{build_hamiltonian, differentiate, integrate, OperatorMatrix};
pub use superpotential::{make_partners, PotentialPair, Superpotential};
