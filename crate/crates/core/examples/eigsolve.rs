//! Numerical spectrum of −Δ + V: round sphere and a static horizon.

use horizon_spectra::axisym_eigensolver::{solve_surface, Potential};
use horizon_spectra::horizon_geometry::{cross_section, CrossSectionMetric};
use horizon_spectra::horizon_roots::Parameters;
use horizon_spectra::mots_spectrum::ls_eigenvalue;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sphere = CrossSectionMetric::round(1.0);
    let spec = solve_surface(&sphere, &Potential::Constant(0.0), 128, 16)?;
    for level in &spec.levels {
        println!(
            "m = {}  (×{})  λ = {:.10}  (coarse {:.6}, est. error {:.1e})",
            level.m_mode, level.multiplicity, level.value, level.raw, level.error_estimate
        );
    }

    let p = Parameters::new(3.0, 0.1, 0.1, 0.0)?;
    let r_c = p.horizons()?.r_c;
    let metric = cross_section(&p, r_c)?;
    let spec = solve_surface(&metric, &Potential::horizon(r_c, p.lambda, p.q), 256, 4)?;
    let ev = spec.eigenvalues();
    println!("horizon: λ1 = {:.10} (exact {:.10})", ev[0], ls_eigenvalue(r_c, p.lambda, p.q, 0));
    println!("horizon: λ2 = {:.10} (exact {:.10})", ev[1], ls_eigenvalue(r_c, p.lambda, p.q, 1));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
