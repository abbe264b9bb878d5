//! Parameter-grid scans over `(Λ, m, q, a)`.
//!
//! Every grid point is an independent work item; rows come back in
//! lexicographic `(Λ, m, q, a)` order whatever the thread count.

mod config;

pub use config::{AxisSpec, ConfigError, OutputFormat, ScanConfig, ScanGrid, DEFAULT_GRID_N};

use crate::area_charge;
use crate::axisym_eigensolver::{solve_surface, Potential, SolverError};
use crate::horizon_geometry::{cross_section, GeometryError};
use crate::horizon_roots::{
    mass_hypothesis, mass_window, Inadmissibility, ParameterError, Parameters, RootError,
};
use crate::mots_spectrum::{index_and_flags, SpectrumError, ZERO_REL_TOL};
use crate::report::{Cell, Table};
use rayon::prelude::*;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScanError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Parameters(#[from] ParameterError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

pub const SCAN_COLUMNS: [&str; 20] = [
    "Lambda",
    "m",
    "q",
    "a",
    "admissible",
    "r_mm",
    "r_minus",
    "r_plus",
    "r_c",
    "lambda1",
    "lambda2",
    "index",
    "degenerate",
    "stable_symmetrized",
    "area",
    "charge",
    "ac_margin",
    "mass_window_ok",
    "mass_hypothesis_ok",
    "reason",
];

/// Spectral and geometric data of an admissible point.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub roots: [f64; 4],
    pub lambda1: f64,
    pub lambda2: f64,
    pub index: u32,
    pub degenerate: bool,
    pub stable_symmetrized: bool,
    pub area: f64,
    pub charge: f64,
    pub ac_margin: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub lambda: f64,
    pub m: f64,
    pub q: f64,
    pub a: f64,
    /// Absent when the charge bound already fails.
    pub mass_window_ok: Option<bool>,
    pub mass_hypothesis_ok: Option<bool>,
    pub outcome: Result<Analysis, Inadmissibility>,
}

impl ScanRow {
    pub fn admissible(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn analysis(&self) -> Option<&Analysis> {
        self.outcome.as_ref().ok()
    }

    pub fn reason(&self) -> Option<Inadmissibility> {
        self.outcome.as_ref().err().copied()
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut row = vec![
            Cell::Float(self.lambda),
            Cell::Float(self.m),
            Cell::Float(self.q),
            Cell::Float(self.a),
            Cell::Bool(self.admissible()),
        ];
        match &self.outcome {
            Ok(x) => {
                row.extend(x.roots.iter().map(|&r| Cell::Float(r)));
                row.extend([
                    x.lambda1.into(),
                    x.lambda2.into(),
                    x.index.into(),
                    x.degenerate.into(),
                    x.stable_symmetrized.into(),
                    x.area.into(),
                    x.charge.into(),
                    x.ac_margin.into(),
                ]);
            }
            Err(_) => row.extend(std::iter::repeat_n(Cell::Empty, 12)),
        }
        row.push(Cell::opt_bool(self.mass_window_ok));
        row.push(Cell::opt_bool(self.mass_hypothesis_ok));
        row.push(self.reason().map_or(Cell::Empty, |r| r.code().into()));
        row
    }
}

/// Analyses a single grid point.
///
/// Reason codes are assigned in a fixed order: charge bound, static mass
/// window (with the physical charge `q/Ξ`), then root isolation. At `a = 0`
/// the spectrum comes from the closed form; at `a > 0` it is computed on
/// the rotating cross-section with the potential `1/r0² − Λ − 𝒬²/r0⁴`.
pub fn evaluate_point(lambda: f64, m: f64, q: f64, a: f64, grid_n: usize) -> Result<ScanRow, ScanError> {
    let p = Parameters::new(lambda, m, q, a)?;
    let charge = p.physical_charge();
    let mut row = ScanRow {
        lambda,
        m,
        q,
        a,
        mass_window_ok: None,
        mass_hypothesis_ok: None,
        outcome: Err(Inadmissibility::ChargeTooLarge),
    };
    let window = match mass_window(lambda, charge) {
        Ok(w) => w,
        Err(_) => return Ok(row),
    };
    row.mass_window_ok = Some(window.contains(m));
    row.mass_hypothesis_ok = Some(mass_hypothesis(lambda, charge, m).holds);
    if !window.contains(m) {
        row.outcome = Err(Inadmissibility::MassOutOfWindow);
        return Ok(row);
    }
    let h = match p.horizons() {
        Ok(h) if h.admissible => h,
        Ok(_) => {
            row.outcome = Err(Inadmissibility::OrderingViolation);
            return Ok(row);
        }
        Err(RootError::NotAdmissible { reason, .. }) => {
            row.outcome = Err(reason);
            return Ok(row);
        }
        Err(RootError::ChargeTooLarge(_)) => return Ok(row),
    };

    let (lambda1, lambda2, index, degenerate, stable_symmetrized, area) = if a == 0.0 {
        let s = index_and_flags(h.r_c, lambda, q)?;
        let area = 4.0 * PI * h.r_c * h.r_c;
        (s.lambda1, s.lambda2, s.index, s.degenerate, s.stable_symmetrized, area)
    } else {
        let metric = cross_section(&p, h.r_c)?;
        let potential = Potential::horizon(h.r_c, lambda, charge);
        let spec = numeric_spectrum(&metric, &potential, grid_n)?;
        let (l1, l2) = (spec.values[0], spec.values[1]);
        let tol = (ZERO_REL_TOL * (l2 - l1).abs().max(1.0)).max(spec.error);
        let index = spec.values.iter().filter(|v| **v < -tol).count() as u32;
        let degenerate = spec.values.iter().any(|v| v.abs() <= tol);
        (l1, l2, index, degenerate, l1 >= -tol, metric.area())
    };
    row.outcome = Ok(Analysis {
        roots: h.roots(),
        lambda1,
        lambda2,
        index,
        degenerate,
        stable_symmetrized,
        area,
        charge,
        ac_margin: area_charge::margin(lambda, area, charge),
    });
    Ok(row)
}

struct Truncated {
    values: Vec<f64>,
    error: f64,
}

/// Eigenvalues up to and including the first one clearly above zero.
fn numeric_spectrum(
    metric: &crate::horizon_geometry::CrossSectionMetric,
    potential: &Potential,
    n: usize,
) -> Result<Truncated, ScanError> {
    let mut count = 4.min(n / 4);
    loop {
        let spec = solve_surface(metric, potential, n, count)?;
        let values = spec.eigenvalues();
        let error = spec.max_error_estimate();
        let last = *values.last().expect("count is at least one");
        if last > error || count >= n / 4 {
            return Ok(Truncated { values, error });
        }
        count = (2 * count).min(n / 4);
    }
}

/// Runs the grid on `jobs` threads (rayon's default when `None`).
pub fn run_scan(grid: &ScanGrid, jobs: Option<usize>) -> Result<Vec<ScanRow>, ScanError> {
    let points = grid.points();
    let work = || {
        points
            .par_iter()
            .map(|&[l, m, q, a]| evaluate_point(l, m, q, a, grid.grid_n))
            .collect::<Result<Vec<_>, _>>()
    };
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j).build()?.install(work),
        None => work(),
    }
}

pub fn scan_table(rows: &[ScanRow]) -> Table {
    let mut t = Table::new(&SCAN_COLUMNS);
    for r in rows {
        t.push(r.cells());
    }
    t
}
