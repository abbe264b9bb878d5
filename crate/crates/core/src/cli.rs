//! Command-line front end. Every subcommand produces one [`Table`].

use crate::area_charge::{self, AreaChargeReport};
use crate::axisym_eigensolver::{solve_surface, Potential};
use crate::horizon_geometry::{cross_section, CrossSectionMetric};
use crate::horizon_roots::{HorizonKind, Parameters, RootError};
use crate::invariants;
use crate::mots_spectrum::{self, multiplicity};
use crate::report::{Cell, Table};
use crate::scan::{self, OutputFormat, ScanConfig, DEFAULT_GRID_N};
use clap::{Args, Parser, Subcommand};
use std::fs;
use std::path::{Path, PathBuf};
use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_NOT_ADMISSIBLE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "horizon-spectra", version, about = "Horizons, MOTS stability spectra and area-charge bounds in Kerr-Newman-de Sitter")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Isolate and classify the four horizon radii.
    Roots {
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Closed-form symmetrized stability spectrum on a static horizon.
    Spectrum {
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, default_value_t = 0.0)]
        q: f64,
        /// Horizon radius; defaults to the cosmological horizon of (Λ, m, q).
        #[arg(long)]
        r0: Option<f64>,
        #[arg(long)]
        m: Option<f64>,
        /// Report modes 0..=k (default: up to the first positive mode).
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Numerical spectrum of −Δ + V on a horizon cross-section.
    Eigsolve {
        /// Omit for a round sphere of radius --r0.
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long)]
        m: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        q: f64,
        #[arg(long, default_value_t = 0.0)]
        a: f64,
        #[arg(long)]
        r0: Option<f64>,
        /// Number of eigenvalues, counted with multiplicity.
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_GRID_N)]
        grid_n: usize,
        /// Constant potential replacing the default.
        #[arg(long, allow_hyphen_values = true)]
        potential: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Area-charge inequality for a surface, a static horizon, or a catalog.
    AreaCharge {
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long)]
        area: Option<f64>,
        #[arg(long)]
        charge: Option<f64>,
        /// Cross-check at the cosmological horizon of (Λ, m, q).
        #[arg(long)]
        m: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        q: f64,
        /// CSV with Lambda, area and charge columns.
        #[arg(long, conflicts_with_all = ["lambda", "area", "charge", "m"])]
        catalog: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Grid scan over (Λ, m, q, a).
    Scan(ScanArgs),
    /// Run the randomized invariant suite (seed from HORIZON_SPECTRA_SEED).
    Check {
        #[arg(long, default_value_t = invariants::DEFAULT_DRAWS)]
        draws: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long)]
    pub lambda: f64,
    #[arg(long)]
    pub m: f64,
    #[arg(long, default_value_t = 0.0)]
    pub q: f64,
    #[arg(long, default_value_t = 0.0)]
    pub a: f64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    pub format: OutputFormat,
    /// Exit with status 2 when a point is not admissible.
    #[arg(long)]
    pub strict: bool,
}

/// Axis flags take a value, a comma list, or `from:to:count`.
#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long)]
    pub grid_n: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<OutputFormat>,
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::NotAdmissible(_) => EXIT_NOT_ADMISSIBLE,
            _ => EXIT_ERROR,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_owned(),
        source,
    }
}

fn root_error(e: RootError) -> CliError {
    match e {
        RootError::NotAdmissible { .. } | RootError::ChargeTooLarge(_) => CliError::NotAdmissible(e.to_string()),
    }
}

/// Result of a command: a table plus where and how to write it.
#[derive(Debug)]
pub struct Outcome {
    pub table: Table,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub exit: u8,
}

impl Outcome {
    /// Writes the table to `out`, returning the rendered text when there is
    /// no output file.
    pub fn emit(&self) -> Result<Option<String>, CliError> {
        let text = self.table.render(self.format);
        match &self.out {
            Some(path) => {
                fs::write(path, text).map_err(io_error(path))?;
                Ok(None)
            }
            None => Ok(Some(text)),
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Roots { point, output } => roots(point, output),
        Command::Spectrum {
            lambda,
            q,
            r0,
            m,
            k,
            output,
        } => spectrum(lambda, q, r0, m, k, output),
        Command::Eigsolve {
            lambda,
            m,
            q,
            a,
            r0,
            k,
            grid_n,
            potential,
            output,
        } => eigsolve(lambda, m, q, a, r0, k, grid_n, potential, output),
        Command::AreaCharge {
            lambda,
            area,
            charge,
            m,
            q,
            catalog,
            output,
        } => area_charge_cmd(lambda, area, charge, m, q, catalog, output),
        Command::Scan(args) => scan_cmd(args),
        Command::Check { draws, output } => check(draws, output),
    }
}

fn finish(table: Table, output: OutputArgs, admissible: bool) -> Outcome {
    Outcome {
        table,
        format: output.format,
        out: output.out,
        exit: if output.strict && !admissible {
            EXIT_NOT_ADMISSIBLE
        } else {
            EXIT_OK
        },
    }
}

const ROOT_COLUMNS: [&str; 17] = [
    "Lambda", "m", "q", "a", "admissible", "kind", "r_mm", "r_minus", "r_plus", "r_c", "min_gap", "r1", "r2",
    "r3", "rhat1", "rhat2", "reason",
];

fn roots(point: PointArgs, output: OutputArgs) -> Result<Outcome, CliError> {
    let p = Parameters::new(point.lambda, point.m, point.q, point.a).map_err(usage)?;
    let mut row: Vec<Cell> = vec![p.lambda.into(), p.m.into(), p.q.into(), p.a.into()];
    let admissible = match p.horizons() {
        Ok(h) => {
            row.push(h.admissible.into());
            row.push(match h.kind {
                HorizonKind::Charged => "charged".into(),
                HorizonKind::UnchargedStatic => "uncharged_static".into(),
            });
            row.extend(h.roots().map(Cell::Float));
            let c = h.critical;
            row.extend([h.min_gap, c.r1, c.r2, c.r3, c.rhat1, c.rhat2].map(Cell::Float));
            row.push(if h.admissible {
                Cell::Empty
            } else {
                "ORDERING_VIOLATION".into()
            });
            h.admissible
        }
        Err(e) => {
            let code = match e {
                RootError::NotAdmissible { reason, .. } => reason.code(),
                RootError::ChargeTooLarge(_) => "CHARGE_TOO_LARGE",
            };
            row.push(false.into());
            row.extend(std::iter::repeat_n(Cell::Empty, 11));
            row.push(code.into());
            false
        }
    };
    let mut t = Table::new(&ROOT_COLUMNS);
    t.push(row);
    Ok(finish(t, output, admissible))
}

fn spectrum(
    lambda: f64,
    q: f64,
    r0: Option<f64>,
    m: Option<f64>,
    k: Option<u32>,
    output: OutputArgs,
) -> Result<Outcome, CliError> {
    let r0 = match (r0, m) {
        (Some(r), _) => r,
        (None, Some(m)) => {
            let p = Parameters::new(lambda, m, q, 0.0).map_err(usage)?;
            p.horizons().map_err(root_error)?.r_c
        }
        (None, None) => return Err(usage("spectrum needs --r0 or --m")),
    };
    let report = mots_spectrum::index_and_flags(r0, lambda, q).map_err(usage)?;
    let modes = match k {
        Some(k) if k > mots_spectrum::MAX_MODE => {
            return Err(usage(format!("--k {k} exceeds the mode cap {}", mots_spectrum::MAX_MODE)))
        }
        Some(k) => mots_spectrum::spectrum_modes(r0, lambda, q, k + 1),
        None => report.modes.clone(),
    };
    let mut t = Table::new(&[
        "r0",
        "Lambda",
        "q",
        "k",
        "multiplicity",
        "eigenvalue",
        "index",
        "degenerate",
        "stable_symmetrized",
    ]);
    for mode in modes {
        t.push(vec![
            r0.into(),
            lambda.into(),
            q.into(),
            mode.k.into(),
            multiplicity(mode.k).into(),
            mode.value.into(),
            report.index.into(),
            report.degenerate.into(),
            report.stable_symmetrized.into(),
        ]);
    }
    Ok(finish(t, output, true))
}

#[allow(clippy::too_many_arguments)]
fn eigsolve(
    lambda: Option<f64>,
    m: Option<f64>,
    q: f64,
    a: f64,
    r0: Option<f64>,
    count: usize,
    grid_n: usize,
    potential: Option<f64>,
    output: OutputArgs,
) -> Result<Outcome, CliError> {
    let (metric, default_potential) = match lambda {
        None => {
            let r0 = r0.unwrap_or(1.0);
            if !(r0.is_finite() && r0 > 0.0) {
                return Err(usage(format!("--r0 must be positive, got {r0}")));
            }
            (CrossSectionMetric::round(r0), 0.0)
        }
        Some(lambda) => {
            let m = m.ok_or_else(|| usage("eigsolve with --lambda needs --m"))?;
            let p = Parameters::new(lambda, m, q, a).map_err(usage)?;
            let r0 = match r0 {
                Some(r) => r,
                None => p
                    .polynomial()
                    .cosmological_root()
                    .ok_or_else(|| CliError::NotAdmissible("no cosmological horizon".into()))?,
            };
            let metric = cross_section(&p, r0).map_err(|e| CliError::NotAdmissible(e.to_string()))?;
            let v = crate::axisym_eigensolver::horizon_potential(r0, lambda, p.physical_charge());
            (metric, v)
        }
    };
    let v = Potential::Constant(potential.unwrap_or(default_potential));
    let spec = solve_surface(&metric, &v, grid_n, count).map_err(usage)?;
    let mut t = Table::new(&[
        "m_mode",
        "radial_index",
        "multiplicity",
        "eigenvalue",
        "coarse",
        "fine",
        "error_estimate",
    ]);
    for l in &spec.levels {
        t.push(vec![
            l.m_mode.into(),
            l.radial_index.into(),
            l.multiplicity.into(),
            l.value.into(),
            l.raw.into(),
            l.fine.into(),
            l.error_estimate.into(),
        ]);
    }
    Ok(finish(t, output, true))
}

const AREA_COLUMNS: [&str; 11] = [
    "Lambda",
    "area",
    "charge",
    "margin",
    "holds",
    "rigidity",
    "charge_bound_ok",
    "area_min",
    "area_max",
    "area_in_window",
    "interpretation",
];

fn area_cells(r: &AreaChargeReport) -> Vec<Cell> {
    vec![
        r.lambda.into(),
        r.area.into(),
        r.charge.into(),
        r.margin.into(),
        r.holds.into(),
        r.rigidity.into(),
        r.charge_bound_ok.into(),
        Cell::opt_float(r.area_window.map(|w| w.0)),
        Cell::opt_float(r.area_window.map(|w| w.1)),
        r.area_in_window.into(),
        r.interpretation().map_or(Cell::Empty, Cell::from),
    ]
}

fn area_charge_cmd(
    lambda: Option<f64>,
    area: Option<f64>,
    charge: Option<f64>,
    m: Option<f64>,
    q: f64,
    catalog: Option<PathBuf>,
    output: OutputArgs,
) -> Result<Outcome, CliError> {
    if let Some(path) = catalog {
        let file = fs::File::open(&path).map_err(io_error(&path))?;
        let reports = area_charge::read_catalog(file).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let mut t = Table::new(&AREA_COLUMNS);
        for r in &reports {
            t.push(area_cells(r));
        }
        return Ok(finish(t, output, true));
    }
    let lambda = lambda.ok_or_else(|| usage("area-charge needs --lambda (or --catalog)"))?;
    match (area, m) {
        (Some(area), None) => {
            let r = area_charge::check(lambda, area, charge.unwrap_or(0.0)).map_err(usage)?;
            let mut t = Table::new(&AREA_COLUMNS);
            t.push(area_cells(&r));
            Ok(finish(t, output, true))
        }
        (None, Some(m)) => {
            let p = Parameters::new(lambda, m, q, 0.0).map_err(usage)?;
            let x = match area_charge::horizon_crosscheck(&p) {
                Ok(x) => x,
                Err(area_charge::AreaChargeError::NotAdmissible(e)) => return Err(root_error(e)),
                Err(e) => return Err(usage(e)),
            };
            let mut header = AREA_COLUMNS.to_vec();
            header.extend(["r_c", "lambda2", "spectral_margin", "identity_holds"]);
            let mut t = Table::new(&header);
            let mut row = area_cells(&x.report);
            row.extend([
                x.r_c.into(),
                x.lambda2.into(),
                x.spectral_margin.into(),
                x.identity_holds.into(),
            ]);
            t.push(row);
            Ok(finish(t, output, true))
        }
        _ => Err(usage("area-charge needs exactly one of --area or --m")),
    }
}

/// Merges the optional config file with flag overrides, then validates.
pub fn scan_config(args: &ScanArgs) -> Result<ScanConfig, CliError> {
    let mut table = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(io_error(path))?;
            text.parse::<toml::Table>()
                .map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        None => toml::Table::new(),
    };
    let axes = [("lambda", &args.lambda), ("m", &args.m), ("q", &args.q), ("a", &args.a)];
    for (key, flag) in axes {
        if let Some(v) = flag {
            table.insert(key.into(), toml::Value::String(v.clone()));
        }
    }
    if let Some(n) = args.grid_n {
        table.insert("grid_n".into(), toml::Value::Integer(n as i64));
    }
    if let Some(out) = &args.out {
        table.insert("out".into(), toml::Value::String(out.display().to_string()));
    }
    if let Some(f) = args.format {
        let s = match f {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        };
        table.insert("format".into(), toml::Value::String(s.into()));
    }
    if args.strict {
        table.insert("strict".into(), toml::Value::Boolean(true));
    }
    if let Some(j) = args.jobs {
        table.insert("jobs".into(), toml::Value::Integer(j as i64));
    }
    ScanConfig::from_table(table).map_err(usage)
}

fn scan_cmd(args: ScanArgs) -> Result<Outcome, CliError> {
    let config = scan_config(&args)?;
    let grid = config.validate().map_err(usage)?;
    let rows = scan::run_scan(&grid, config.jobs).map_err(failed)?;
    let all_admissible = rows.iter().all(scan::ScanRow::admissible);
    Ok(Outcome {
        table: scan::scan_table(&rows),
        format: config.format,
        out: config.out,
        exit: if config.strict && !all_admissible {
            EXIT_NOT_ADMISSIBLE
        } else {
            EXIT_OK
        },
    })
}

fn check(draws: usize, output: OutputArgs) -> Result<Outcome, CliError> {
    let seed = invariants::seed_from_env().map_err(usage)?;
    let outcomes = invariants::run_suite(seed, draws);
    let passed = outcomes.iter().all(invariants::CheckOutcome::passed);
    let mut out = finish(invariants::summary_table(&outcomes), output, true);
    if !passed {
        out.exit = EXIT_ERROR;
    }
    Ok(out)
}
