//! Induced metric on a rotating horizon cross-section.

use horizon_spectra::horizon_geometry::{area_charge, cross_section, AxisymmetricMetric};
use horizon_spectra::horizon_roots::Parameters;
use std::error::Error;
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = Parameters::new(3.0, 0.1, 0.1, 0.05)?;
    let r0 = p.polynomial().cosmological_root().ok_or("no cosmological root")?;
    let metric = cross_section(&p, r0)?;
    println!("r_c(a = 0.05) = {r0:.12}, Ξ = {:.6}", metric.xi);
    for theta in [0.25 * PI, 0.5 * PI, 0.75 * PI] {
        let (a, b) = metric.coefficients(theta);
        println!("θ = {theta:.4}: A = {a:.8}, B = {b:.8}");
    }
    // B/(A·d²) → 1 as the distance d to either pole shrinks
    for d in [1e-1, 1e-2, 1e-3] {
        let (a0, b0) = metric.coefficients(d);
        let (a1, b1) = metric.coefficients(PI - d);
        println!("d = {d:.0e}: north {:.8}, south {:.8}", b0 / (a0 * d * d), b1 / (a1 * d * d));
    }
    let ac = area_charge(&p, &metric);
    println!("area = {:.12}, charge = {:.12}", ac.area, ac.charge);

    let off = Parameters::new(3.0, 0.1, 0.1, 0.0)?;
    if let Err(e) = cross_section(&off, 0.5) {
        println!("r0 = 0.5 rejected: {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
