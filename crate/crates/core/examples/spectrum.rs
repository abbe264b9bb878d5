//! Closed-form stability spectrum on the static cosmological horizon.

use horizon_spectra::horizon_roots::Parameters;
use horizon_spectra::mots_spectrum::{index_and_flags, kds_lambda2, SignRegions};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (lambda, m, q) = (3.0, 0.1, 0.1);
    let r_c = Parameters::new(lambda, m, q, 0.0)?.horizons()?.r_c;
    let s = index_and_flags(r_c, lambda, q)?;
    for mode in &s.modes {
        println!("k = {}  (×{})  λ = {:+.12}", mode.k, mode.multiplicity, mode.value);
    }
    println!("index {}, unstable in the full operator: {}", s.index, s.unstable_full);

    let regions = SignRegions::new(lambda, q)?;
    let (lo, hi) = regions.interval();
    println!("r_c = {r_c:.12} lies in ({lo:.6}, {hi:.6})");

    let r_kds = Parameters::new(lambda, m, 0.0, 0.0)?.horizons()?.r_c;
    println!("uncharged: r_c = {r_kds:.12}, λ2 = {:.12}", kds_lambda2(r_kds, lambda)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
