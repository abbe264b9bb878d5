//! A small parameter scan written as CSV.

use horizon_spectra::scan::{run_scan, scan_table, OutputFormat, ScanConfig};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let config = ScanConfig::from_toml_str(
        r#"
lambda = 3.0
m = "0.06:0.2:4"
q = [0.0, 0.1]
a = [0.0, 0.01]
grid_n = 64
"#,
    )?;
    let rows = run_scan(&config.validate()?, config.jobs)?;
    for row in &rows {
        match row.analysis() {
            Some(x) => println!(
                "m = {:.3} q = {} a = {}: r_c = {:.8}, index {}",
                row.m, row.q, row.a, x.roots[3], x.index
            ),
            None => println!("m = {:.3} q = {} a = {}: {:?}", row.m, row.q, row.a, row.reason()),
        }
    }
    print!("{}", scan_table(&rows).render(OutputFormat::Csv));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
