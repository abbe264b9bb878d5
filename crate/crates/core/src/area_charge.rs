//! Area-charge inequality for index-one spherical MOTS:
//!
//! ```text
//! Λ|Σ| + 16π²𝒬(Σ)²/|Σ| ≤ 12π
//! ```
//!
//! with equality exactly in the rigid case. Two consequences follow by
//! solving the quadratic in `|Σ|`: `𝒬(Σ)² ≤ 9/(4Λ)` and
//! `(2π/Λ)(3 − √(9 − 4Λ𝒬²)) ≤ |Σ| ≤ (2π/Λ)(3 + √(9 − 4Λ𝒬²))`.
//!
//! At a static cosmological horizon (`|Σ| = 4πr_c²`, `𝒬 = Q`) the margin is
//! exactly `4πr_c²·λ2(L_s(0))`, so the inequality holds there iff `λ2 ≥ 0`.

use crate::horizon_roots::{Parameters, RootError};
use crate::mots_spectrum::ls_eigenvalue;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::io;
use thiserror::Error;

/// `|margin| <= RIGIDITY_REL_TOL · 12π` counts as equality.
pub const RIGIDITY_REL_TOL: f64 = 1e-10;

pub const RIGIDITY_INTERPRETATION: &str = "equality: χ₊ ≡ 0 on Σ, E = cν for a constant c, \
     and the ambient scalar curvature along Σ equals 2Λ + 2c²";

#[derive(Debug, Error)]
pub enum AreaChargeError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("rotation must vanish for the horizon cross-check, got a = {0}")]
    Rotating(f64),
    #[error(transparent)]
    NotAdmissible(#[from] RootError),
    #[error("catalog: {0}")]
    Catalog(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AreaChargeReport {
    pub lambda: f64,
    pub area: f64,
    pub charge: f64,
    /// `12π − Λ|Σ| − 16π²𝒬²/|Σ|`.
    pub margin: f64,
    pub holds: bool,
    pub rigidity: bool,
    /// `𝒬² ≤ 9/(4Λ)`.
    pub charge_bound_ok: bool,
    /// Admissible area range; absent when the charge bound fails.
    pub area_window: Option<(f64, f64)>,
    pub area_in_window: bool,
}

impl AreaChargeReport {
    pub fn interpretation(&self) -> Option<&'static str> {
        self.rigidity.then_some(RIGIDITY_INTERPRETATION)
    }
}

/// `12π − Λ|Σ| − 16π²𝒬²/|Σ|`.
pub fn margin(lambda: f64, area: f64, charge: f64) -> f64 {
    12.0 * PI - lambda * area - 16.0 * PI * PI * charge * charge / area
}

pub fn area_window(lambda: f64, charge: f64) -> Option<(f64, f64)> {
    let disc = 9.0 - 4.0 * lambda * charge * charge;
    if disc < 0.0 {
        return None;
    }
    let s = disc.sqrt();
    let f = 2.0 * PI / lambda;
    Some((f * (3.0 - s), f * (3.0 + s)))
}

pub fn check(lambda: f64, area: f64, charge: f64) -> Result<AreaChargeReport, AreaChargeError> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(AreaChargeError::InvalidInput(format!(
            "Λ must be positive, got {lambda}"
        )));
    }
    if !(area.is_finite() && area > 0.0) {
        return Err(AreaChargeError::InvalidInput(format!(
            "area must be positive, got {area}"
        )));
    }
    if !charge.is_finite() {
        return Err(AreaChargeError::InvalidInput(format!(
            "charge must be finite, got {charge}"
        )));
    }
    let m = margin(lambda, area, charge);
    let window = area_window(lambda, charge);
    Ok(AreaChargeReport {
        lambda,
        area,
        charge,
        margin: m,
        holds: m >= 0.0,
        rigidity: m.abs() <= RIGIDITY_REL_TOL * 12.0 * PI,
        charge_bound_ok: charge * charge <= 9.0 / (4.0 * lambda),
        area_window: window,
        area_in_window: window.is_some_and(|(lo, hi)| lo <= area && area <= hi),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HorizonCrosscheck {
    pub r_c: f64,
    pub report: AreaChargeReport,
    pub lambda2: f64,
    /// `4π r_c² λ2`.
    pub spectral_margin: f64,
    pub discrepancy: f64,
    /// `discrepancy ≤ 1e−10 · 12π`.
    pub identity_holds: bool,
}

/// Evaluates the inequality at the static cosmological horizon by two
/// routes: directly, and through `4πr_c²λ2`.
pub fn horizon_crosscheck(params: &Parameters) -> Result<HorizonCrosscheck, AreaChargeError> {
    if params.a != 0.0 {
        return Err(AreaChargeError::Rotating(params.a));
    }
    let h = params.horizons()?;
    let r_c = h.r_c;
    let report = check(params.lambda, 4.0 * PI * r_c * r_c, params.q)?;
    let lambda2 = ls_eigenvalue(r_c, params.lambda, params.q, 1);
    let spectral_margin = 4.0 * PI * r_c * r_c * lambda2;
    let discrepancy = (report.margin - spectral_margin).abs();
    Ok(HorizonCrosscheck {
        r_c,
        identity_holds: discrepancy <= RIGIDITY_REL_TOL * 12.0 * PI,
        report,
        lambda2,
        spectral_margin,
        discrepancy,
    })
}

/// Reads `(Lambda, area, charge)` records from CSV with a header row.
///
/// Extra columns are ignored and rows with an empty area are skipped, so
/// scan output can be fed back directly.
pub fn read_catalog<R: io::Read>(reader: R) -> Result<Vec<AreaChargeReport>, AreaChargeError> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers()?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| AreaChargeError::InvalidInput(format!("catalog lacks a `{name}` column")))
    };
    let (il, ia, iq) = (col("Lambda")?, col("area")?, col("charge")?);
    let mut out = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let field = |i: usize| rec.get(i).unwrap_or("");
        if field(ia).is_empty() {
            continue;
        }
        let parse = |i: usize| {
            field(i).parse::<f64>().map_err(|e| {
                AreaChargeError::InvalidInput(format!("record {}: `{}`: {e}", line + 1, field(i)))
            })
        };
        out.push(check(parse(il)?, parse(ia)?, parse(iq)?)?);
    }
    Ok(out)
}
