//! Horizons and MOTS stability in Kerr–Newman–de Sitter spacetimes.
//!
//! The library isolates the four real roots of the horizon polynomial,
//! evaluates the symmetrized stability spectrum on the static cosmological
//! horizon in closed form, solves the same operator numerically on rotating
//! cross-sections, and checks the area-charge inequality.

pub mod area_charge;
pub mod cli;
pub mod axisym_eigensolver;
pub mod horizon_geometry;
pub mod horizon_roots;
pub mod invariants;
pub mod mots_spectrum;
pub mod report;
pub mod scan;

pub use area_charge::{check as area_charge_check, AreaChargeReport};
pub use axisym_eigensolver::{perturbation_sweep, solve_surface, NumericSpectrum, Potential};
pub use horizon_geometry::{cross_section, CrossSectionMetric};
pub use horizon_roots::{isolate_roots, HorizonPolynomial, HorizonSet, Parameters};
pub use mots_spectrum::{ls_eigenvalue, SpectrumReport};
