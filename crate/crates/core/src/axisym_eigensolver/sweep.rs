//! Eigenvalue continuity in the rotation parameter.
//!
//! The cosmological root is continued from `a = 0` by Newton steps in `a`,
//! the cross-section metric is rebuilt at each `a`, and the potential is
//! held at its `a = 0` value (the `a`-dependent potential is not available
//! in closed form). The sweep therefore measures how the kinetic part of
//! the operator moves the lowest eigenvalues.

use super::{horizon_potential, solve_surface, Potential, SolverError};
use crate::horizon_geometry::{cross_section, GeometryError};
use crate::horizon_roots::{ParameterError, Parameters, RootError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest `a` increment taken by a single continuation step.
const CONTINUATION_STEP: f64 = 0.005;
const MAX_NEWTON: usize = 50;
/// Tracked and independently isolated roots must agree to this (relative).
const BRANCH_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SweepError {
    #[error(transparent)]
    Parameters(#[from] ParameterError),
    #[error("no cosmological horizon at a = 0: {0}")]
    Root(#[from] RootError),
    #[error("continuation lost the cosmological root at a = {a}: tracked {tracked}, largest root {largest:?}")]
    ContinuationLost {
        a: f64,
        tracked: f64,
        largest: Option<f64>,
    },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("rotation values must be finite, non-negative and ascending")]
    BadRotationList,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepOptions {
    pub grid_n: usize,
    /// Eigenvalues tracked, with multiplicity.
    pub count: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            grid_n: 256,
            count: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub a: f64,
    pub r0: f64,
    pub residual: f64,
    /// Whether `Δ_r` still has the full four-root pattern at this `a`.
    pub four_roots: bool,
    pub eigenvalues: Vec<f64>,
    /// `λ_k(a) − λ_k(0)`.
    pub drift: Vec<f64>,
    pub error_estimate: f64,
    /// `λ1 < 0 < λ2`.
    pub signs_persist: bool,
    /// For `q = 0`: every positive root has `1 − Λr²/3 > 0`.
    pub kds_certificate: Option<bool>,
}

impl SweepEntry {
    pub fn lambda1(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda2(&self) -> f64 {
        self.eigenvalues[1]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub params: Parameters,
    /// Potential held fixed across the sweep.
    pub frozen_potential: f64,
    pub entries: Vec<SweepEntry>,
    /// Largest swept `a` up to which `λ1 < 0 < λ2` held at every point.
    pub a_star: Option<f64>,
}

impl SweepReport {
    /// `|λ_k(a) − λ_k(0)| / a²` at the entry with rotation `a`.
    pub fn drift_constants(&self, a: f64) -> Option<Vec<f64>> {
        let e = self.entries.iter().find(|e| e.a == a)?;
        Some(e.drift.iter().map(|d| d.abs() / (a * a)).collect())
    }
}

fn newton_on_rotation(params: &Parameters, start: f64) -> Option<f64> {
    let poly = params.polynomial();
    let mut r = start;
    for _ in 0..MAX_NEWTON {
        let d = poly.eval_d1(r);
        if d == 0.0 {
            return None;
        }
        let step = poly.eval(r) / d;
        r -= step;
        if !r.is_finite() {
            return None;
        }
        if step.abs() <= 4.0 * f64::EPSILON * r.abs().max(1.0) {
            return Some(r);
        }
    }
    poly.is_root(r).then_some(r)
}

/// Continues the cosmological root from `a_from` (root `r_from`) to `a_to`.
fn continue_root(base: &Parameters, a_from: f64, r_from: f64, a_to: f64) -> Result<f64, SweepError> {
    let span = a_to - a_from;
    let steps = ((span / CONTINUATION_STEP).ceil() as usize).max(1);
    let mut r = r_from;
    for s in 1..=steps {
        let a = if s == steps {
            a_to
        } else {
            a_from + span * s as f64 / steps as f64
        };
        let p = base.with_rotation(a)?;
        r = newton_on_rotation(&p, r).ok_or(SweepError::ContinuationLost {
            a,
            tracked: r,
            largest: p.polynomial().cosmological_root(),
        })?;
    }
    let p = base.with_rotation(a_to)?;
    let largest = p.polynomial().cosmological_root();
    let ok = largest.is_some_and(|l| (l - r).abs() <= BRANCH_REL_TOL * l.abs().max(1.0));
    if !ok || !p.polynomial().is_root(r) {
        return Err(SweepError::ContinuationLost {
            a: a_to,
            tracked: r,
            largest,
        });
    }
    Ok(r)
}

/// Sweeps the lowest eigenvalues over `rotations` (ascending, `a ≥ 0`).
///
/// The `a = 0` baseline is always computed; drifts are measured against it
/// on the same grid, so discretisation error largely cancels.
pub fn perturbation_sweep(
    params: &Parameters,
    rotations: &[f64],
    options: SweepOptions,
) -> Result<SweepReport, SweepError> {
    if rotations
        .iter()
        .any(|a| !(a.is_finite() && *a >= 0.0))
        || rotations.windows(2).any(|w| w[1] < w[0])
    {
        return Err(SweepError::BadRotationList);
    }
    let base = params.with_rotation(0.0)?;
    let horizons = base.horizons()?;
    let r_c0 = horizons.r_c;
    let frozen_value = horizon_potential(r_c0, base.lambda, base.q);
    let frozen = Potential::Constant(frozen_value);

    let mut tracked = Vec::with_capacity(rotations.len());
    let (mut a_prev, mut r_prev) = (0.0, r_c0);
    for &a in rotations {
        let r = if a == 0.0 {
            r_c0
        } else {
            continue_root(&base, a_prev, r_prev, a)?
        };
        tracked.push((a, r));
        a_prev = a;
        r_prev = r;
    }

    let evaluate = |a: f64, r0: f64| -> Result<(Vec<f64>, f64), SweepError> {
        let p = base.with_rotation(a)?;
        let metric = cross_section(&p, r0)?;
        let spec = solve_surface(&metric, &frozen, options.grid_n, options.count)?;
        Ok((spec.eigenvalues(), spec.max_error_estimate()))
    };
    let (baseline, _) = evaluate(0.0, r_c0)?;

    let entries = tracked
        .par_iter()
        .map(|&(a, r0)| -> Result<SweepEntry, SweepError> {
            let p = base.with_rotation(a)?;
            let poly = p.polynomial();
            let (eigenvalues, error_estimate) = evaluate(a, r0)?;
            let drift = eigenvalues
                .iter()
                .zip(&baseline)
                .map(|(x, y)| x - y)
                .collect();
            let kds_certificate = (p.q == 0.0).then(|| {
                poly.real_roots()
                    .into_iter()
                    .filter(|&r| r > 0.0)
                    .all(|r| 1.0 - p.lambda * r * r / 3.0 > 0.0)
            });
            Ok(SweepEntry {
                a,
                r0,
                residual: poly.eval(r0).abs(),
                four_roots: p.horizons().is_ok_and(|h| h.admissible),
                signs_persist: eigenvalues[0] < 0.0 && 0.0 < eigenvalues[1],
                eigenvalues,
                drift,
                error_estimate,
                kds_certificate,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let a_star = entries
        .iter()
        .take_while(|e| e.signs_persist)
        .last()
        .map(|e| e.a);

    Ok(SweepReport {
        params: base.with_rotation(params.a)?,
        frozen_potential: frozen_value,
        entries,
        a_star,
    })
}
