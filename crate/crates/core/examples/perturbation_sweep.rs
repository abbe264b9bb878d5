//! Lowest eigenvalues as the rotation is switched on.

use horizon_spectra::axisym_eigensolver::{perturbation_sweep, SweepOptions};
use horizon_spectra::horizon_roots::Parameters;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for q in [0.0, 0.1] {
        let p = Parameters::new(3.0, 0.1, q, 0.0)?;
        let report = perturbation_sweep(&p, &[0.0, 0.01, 0.02, 0.05], SweepOptions::default())?;
        println!("q = {q}, frozen potential {:.10}", report.frozen_potential);
        for e in &report.entries {
            println!(
                "  a = {:.2}: r0 = {:.10}, λ1 = {:+.8}, λ2 = {:+.8}, drift λ2 = {:+.2e}, four roots: {}",
                e.a,
                e.r0,
                e.lambda1(),
                e.lambda2(),
                e.drift[1],
                e.four_roots
            );
        }
        println!("  signs persist up to a = {:?}", report.a_star);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
