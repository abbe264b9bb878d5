//! Isolate and classify the four horizons of a charged de Sitter black hole.

use horizon_spectra::horizon_roots::{mass_hypothesis, mass_window, Parameters};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = Parameters::new(3.0, 0.1, 0.1, 0.0)?;
    let h = p.horizons()?;
    for (label, r) in h.labelled() {
        println!("{label:?}: r = {r:.12}, Δ_r(r) = {:.1e}", p.polynomial().eval(r));
    }
    println!("interlacing of critical points: {}", h.critical.interlaces(&h));

    let window = mass_window(p.lambda, p.q)?;
    let hyp = mass_hypothesis(p.lambda, p.q, p.m);
    println!("mass window: 0 < m < {:.12}", window.m_max);
    println!("mass threshold: {:.12} (holds: {})", hyp.threshold, hyp.holds);

    // too heavy: only the negative root and one tiny positive root survive
    let heavy = Parameters::new(3.0, 10.0, 0.1, 0.0)?;
    match heavy.horizons() {
        Ok(_) => println!("unexpectedly admissible"),
        Err(e) => println!("m = 10: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
