//! Area-charge inequality: direct checks and the horizon cross-check.

use horizon_spectra::area_charge::{check, horizon_crosscheck, read_catalog};
use horizon_spectra::horizon_roots::Parameters;
use std::error::Error;
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sphere = check(3.0, 4.0 * PI, 0.0)?;
    println!("unit de Sitter sphere: margin {:.1e}, rigid: {}", sphere.margin, sphere.rigidity);
    if let Some(text) = sphere.interpretation() {
        println!("  {text}");
    }

    let x = horizon_crosscheck(&Parameters::new(3.0, 0.1, 0.1, 0.0)?)?;
    println!(
        "static horizon: margin {:.12}, 4πr_c²λ2 {:.12}, window {:?}",
        x.report.margin, x.spectral_margin, x.report.area_window
    );

    let catalog = "Lambda,area,charge\n3,1,0.1\n3,13,0.1\n1,30,0.5\n";
    for r in read_catalog(catalog.as_bytes())? {
        println!("Λ = {}, |Σ| = {}, 𝒬 = {}: holds {}", r.lambda, r.area, r.charge, r.holds);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
