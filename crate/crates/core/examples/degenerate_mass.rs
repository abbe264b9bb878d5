//! The mass at which λ2 vanishes on the cosmological horizon.

use horizon_spectra::horizon_roots::{mass_hypothesis, HorizonPolynomial};
use horizon_spectra::mots_spectrum::{degenerate_mass, ls_eigenvalue};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (lambda, q) in [(3.0, 0.1), (1.0, 0.3), (0.5, 0.6)] {
        let d = degenerate_mass(lambda, q)?;
        let f = HorizonPolynomial::static_form(lambda, d.mass, q);
        let largest = f.cosmological_root().ok_or("no cosmological root")?;
        println!(
            "Λ = {lambda}, Q = {q}: m_deg = {:.12}, r = {:.12}, f(r) = {:.1e}, λ2 = {:.1e}",
            d.mass,
            d.radius,
            f.eval(d.radius),
            ls_eigenvalue(d.radius, lambda, q, 1),
        );
        println!(
            "    largest root {:.12}, threshold equals m_deg: {}",
            largest,
            (mass_hypothesis(lambda, q, d.mass).threshold - d.mass).abs() < 1e-15
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
