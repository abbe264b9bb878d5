//! Numerical spectrum of `−Δ_h + V` on an axisymmetric topological sphere.
//!
//! Separating `ψ = f(θ) e^{imφ}` reduces the operator to the radial family
//!
//! ```text
//! f ↦ −(1/√(AB)) (√(B/A) f′)′ + (m²/B) f + V f
//! ```
//!
//! on `θ ∈ (0, π)`. Each mode is discretised by second-order finite volumes
//! on the uniform grid `θ_i = (i + ½)π/N`. The flux through the pole faces
//! vanishes because `B(0) = B(π) = 0`, which gives the regular (Neumann
//! type) closure for `m = 0`; for `m ≥ 1` the `m²/B` term forces the
//! solution to zero at the poles.
//!
//! The discrete problem `Kf = λWf` with `W = diag(√(AB) h)` is symmetric by
//! construction and is solved as `W^{-1/2} K W^{-1/2}` with Sturm bisection.
//! Every solve runs grids `N` and `2N`; the reported eigenvalue is the
//! Richardson value `(4λ_{2N} − λ_N)/3` and the two-grid difference gives
//! the error estimate.

mod sweep;
pub mod tridiag;

pub use sweep::{perturbation_sweep, SweepEntry, SweepError, SweepOptions, SweepReport};

use crate::horizon_geometry::AxisymmetricMetric;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

pub const MIN_GRID: usize = 16;

/// Rayleigh-quotient consistency, relative to the operator norm bound.
pub const RAYLEIGH_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("metric coefficient not positive at θ = {theta}: A = {a}, B = {b}")]
    BadMetric { theta: f64, a: f64, b: f64 },
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error("bisection did not converge for mode m = {m_mode} on N = {n}")]
    NoConvergence { m_mode: u32, n: usize },
    #[error("lowest eigenvalue {lowest} differs from the minimal Rayleigh quotient by {gap} (tolerance {tolerance})")]
    RayleighMismatch {
        lowest: f64,
        gap: f64,
        tolerance: f64,
    },
}

/// `1/r0² − Λ − Q²/r0⁴`.
pub fn horizon_potential(r0: f64, lambda: f64, charge: f64) -> f64 {
    let r2 = r0 * r0;
    1.0 / r2 - lambda - charge * charge / (r2 * r2)
}

/// Axisymmetric potential `V(θ)`.
#[derive(Clone)]
pub enum Potential {
    Constant(f64),
    Profile(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl Potential {
    /// `1/r0² − Λ − Q²/r0⁴`, the static horizon potential.
    pub fn horizon(r0: f64, lambda: f64, charge: f64) -> Self {
        Potential::Constant(horizon_potential(r0, lambda, charge))
    }

    pub fn profile(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Potential::Profile(Arc::new(f))
    }

    pub fn eval(&self, theta: f64) -> f64 {
        match self {
            Potential::Constant(c) => *c,
            Potential::Profile(f) => f(theta),
        }
    }
}

impl fmt::Debug for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Potential::Constant(c) => f.debug_tuple("Constant").field(c).finish(),
            Potential::Profile(_) => f.write_str("Profile(..)"),
        }
    }
}

/// One azimuthal mode of the operator on an `N`-cell grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretizedOperator {
    pub n: usize,
    pub m_mode: u32,
    pub theta: Vec<f64>,
    /// Volume weights `√(A·B)·h`.
    pub weights: Vec<f64>,
    /// Diagonal of the symmetric stiffness `K`.
    pub stiffness_diag: Vec<f64>,
    /// Off-diagonal of `K`, shared by both triangles.
    pub stiffness_off: Vec<f64>,
}

impl DiscretizedOperator {
    /// `W^{-1/2} K W^{-1/2}` as (diagonal, off-diagonal).
    pub fn symmetric_form(&self) -> (Vec<f64>, Vec<f64>) {
        let d = self
            .stiffness_diag
            .iter()
            .zip(&self.weights)
            .map(|(k, w)| k / w)
            .collect();
        let e = self
            .stiffness_off
            .iter()
            .zip(self.weights.windows(2))
            .map(|(k, w)| k / (w[0] * w[1]).sqrt())
            .collect();
        (d, e)
    }

    /// Dense weighted operator `W·L = K`.
    pub fn weighted_matrix(&self) -> Vec<Vec<f64>> {
        let n = self.n;
        let mut k = vec![vec![0.0; n]; n];
        for i in 0..n {
            k[i][i] = self.stiffness_diag[i];
            if i + 1 < n {
                k[i][i + 1] = self.stiffness_off[i];
                k[i + 1][i] = self.stiffness_off[i];
            }
        }
        k
    }
}

/// Builds the finite-volume discretisation of mode `m_mode` on `n` cells.
pub fn assemble<M: AxisymmetricMetric + ?Sized>(
    metric: &M,
    potential: &Potential,
    m_mode: u32,
    n: usize,
) -> Result<DiscretizedOperator, SolverError> {
    if n < MIN_GRID {
        return Err(SolverError::InvalidRequest(format!(
            "grid size {n} below minimum {MIN_GRID}"
        )));
    }
    let h = std::f64::consts::PI / n as f64;
    let m2 = f64::from(m_mode).powi(2);

    let mut theta = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);
    for i in 0..n {
        let t = (i as f64 + 0.5) * h;
        let (a, b) = metric.coefficients(t);
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(SolverError::BadMetric { theta: t, a, b });
        }
        let w = (a * b).sqrt() * h;
        theta.push(t);
        weights.push(w);
        diag.push(w * (m2 / b + potential.eval(t)));
    }

    let mut off = Vec::with_capacity(n - 1);
    for i in 1..n {
        let t = i as f64 * h;
        let (a, b) = metric.coefficients(t);
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(SolverError::BadMetric { theta: t, a, b });
        }
        let flux = (b / a).sqrt() / h;
        off.push(-flux);
        diag[i - 1] += flux;
        diag[i] += flux;
    }

    Ok(DiscretizedOperator {
        n,
        m_mode,
        theta,
        weights,
        stiffness_diag: diag,
        stiffness_off: off,
    })
}

/// Lowest eigenvalues of a single mode on a single grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeSolution {
    pub m_mode: u32,
    pub n: usize,
    pub eigenvalues: Vec<f64>,
    /// `|min_j RQ(x_j) − λ_0|` over the computed eigenvectors.
    pub rayleigh_gap: f64,
    pub norm_bound: f64,
}

/// Lowest `count` eigenvalues of `op`, checked against the Rayleigh
/// quotients of their own eigenvectors.
pub fn solve(op: &DiscretizedOperator, count: usize) -> Result<ModeSolution, SolverError> {
    if count == 0 || count > op.n / 4 {
        return Err(SolverError::InvalidRequest(format!(
            "count {count} must be in 1..={}",
            op.n / 4
        )));
    }
    let (d, e) = op.symmetric_form();
    let eigenvalues = tridiag::lowest_eigenvalues(&d, &e, count).ok_or(SolverError::NoConvergence {
        m_mode: op.m_mode,
        n: op.n,
    })?;
    let norm = tridiag::norm_bound(&d, &e);
    let min_rq = eigenvalues
        .iter()
        .map(|&lam| tridiag::rayleigh_quotient(&d, &e, &tridiag::inverse_iteration(&d, &e, lam)))
        .fold(f64::INFINITY, f64::min);
    let rayleigh_gap = (min_rq - eigenvalues[0]).abs();
    let tolerance = RAYLEIGH_REL_TOL * norm.max(1.0);
    if !(rayleigh_gap <= tolerance) {
        return Err(SolverError::RayleighMismatch {
            lowest: eigenvalues[0],
            gap: rayleigh_gap,
            tolerance,
        });
    }
    Ok(ModeSolution {
        m_mode: op.m_mode,
        n: op.n,
        eigenvalues,
        rayleigh_gap,
        norm_bound: norm,
    })
}

/// One eigenvalue level of the full surface operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Level {
    /// Richardson-extrapolated value.
    pub value: f64,
    /// Value on the base grid `N`.
    pub raw: f64,
    /// Value on the refined grid `2N`.
    pub fine: f64,
    /// Estimated error of the `2N` value, `|λ_{2N} − λ_N|/3`.
    pub error_estimate: f64,
    pub m_mode: u32,
    /// Position within its mode (0 = lowest).
    pub radial_index: usize,
    /// 1 for `m = 0`, 2 otherwise (`±m`).
    pub multiplicity: u32,
}

/// Merged spectrum over all azimuthal modes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericSpectrum {
    pub n: usize,
    /// Ascending by value.
    pub levels: Vec<Level>,
    /// Requested number of eigenvalues (with multiplicity).
    pub count: usize,
}

impl NumericSpectrum {
    fn expand(&self, pick: impl Fn(&Level) -> f64) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .levels
            .iter()
            .flat_map(|l| std::iter::repeat_n(pick(l), l.multiplicity as usize))
            .collect();
        v.sort_by(f64::total_cmp);
        v.truncate(self.count);
        v
    }

    /// Lowest `count` extrapolated eigenvalues with multiplicity.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.expand(|l| l.value)
    }

    /// Same, on the base grid only.
    pub fn raw_eigenvalues(&self) -> Vec<f64> {
        self.expand(|l| l.raw)
    }

    pub fn max_error_estimate(&self) -> f64 {
        self.levels
            .iter()
            .map(|l| l.error_estimate)
            .fold(0.0, f64::max)
    }
}

fn solve_mode<M: AxisymmetricMetric + Sync + ?Sized>(
    metric: &M,
    potential: &Potential,
    m_mode: u32,
    n: usize,
    count: usize,
) -> Result<Vec<Level>, SolverError> {
    let (coarse, fine) = rayon::join(
        || assemble(metric, potential, m_mode, n).and_then(|op| solve(&op, count)),
        || assemble(metric, potential, m_mode, 2 * n).and_then(|op| solve(&op, count)),
    );
    let (coarse, fine) = (coarse?, fine?);
    Ok(coarse
        .eigenvalues
        .iter()
        .zip(&fine.eigenvalues)
        .enumerate()
        .map(|(j, (&raw, &fine))| Level {
            value: (4.0 * fine - raw) / 3.0,
            raw,
            fine,
            error_estimate: (fine - raw).abs() / 3.0,
            m_mode,
            radial_index: j,
            multiplicity: if m_mode == 0 { 1 } else { 2 },
        })
        .collect())
}

/// Lowest `count` eigenvalues (with multiplicity) of `−Δ_h + V`.
///
/// Modes are added in order `m = 0, 1, 2, …` until the lowest eigenvalue of
/// the next mode exceeds the current `count`-th value; eigenvalues grow
/// with `|m|`, so no lower level can be missed.
pub fn solve_surface<M: AxisymmetricMetric + Sync + ?Sized>(
    metric: &M,
    potential: &Potential,
    n: usize,
    count: usize,
) -> Result<NumericSpectrum, SolverError> {
    if count == 0 || count > n / 4 {
        return Err(SolverError::InvalidRequest(format!(
            "count {count} must be in 1..={}",
            n / 4
        )));
    }
    let mut levels: Vec<Level> = Vec::new();
    for m_mode in 0..count as u32 {
        let mode_levels = solve_mode(metric, potential, m_mode, n, count)?;
        let cutoff = kth_value(&levels, count);
        if let Some(cut) = cutoff {
            if mode_levels[0].value > cut {
                break;
            }
        }
        levels.extend(mode_levels);
    }
    levels.sort_by(|a, b| {
        a.value
            .total_cmp(&b.value)
            .then(a.m_mode.cmp(&b.m_mode))
            .then(a.radial_index.cmp(&b.radial_index))
    });
    // drop levels that lie entirely beyond the requested count
    let mut seen = 0usize;
    levels.retain(|l| {
        let keep = seen < count;
        seen += l.multiplicity as usize;
        keep
    });
    Ok(NumericSpectrum { n, levels, count })
}

/// `count`-th smallest value with multiplicity, if that many are known.
fn kth_value(levels: &[Level], count: usize) -> Option<f64> {
    let mut values: Vec<(f64, u32)> = levels.iter().map(|l| (l.value, l.multiplicity)).collect();
    values.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut seen = 0usize;
    for (v, mult) in values {
        seen += mult as usize;
        if seen >= count {
            return Some(v);
        }
    }
    None
}
