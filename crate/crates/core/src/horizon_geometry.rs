//! Induced metric on a horizon cross-section `{t = const, r = r0}`.
//!
//! Restricting the Boyer-Lindquist line element to `dt = dr = 0` and using
//! `Δ_r(r0) = 0` leaves the axisymmetric 2-metric
//!
//! ```text
//! h = A(θ) dθ² + B(θ) dφ²,
//! A = ρ²/Δ_θ,
//! B = Δ_θ sin²θ (r0² + a²)² / (ρ² Ξ²),
//! ```
//!
//! with `ρ² = r0² + a²cos²θ` and `Δ_θ = 1 + (Λ/3)a²cos²θ`. The area density
//! simplifies to `√(AB) = sinθ (r0² + a²)/Ξ`, so `|Σ| = 4π(r0² + a²)/Ξ`. At
//! `a = 0` this is the round sphere of radius `r0`. Near the poles
//! `B/(Aθ²) → 1`, so the metric closes smoothly.

use crate::horizon_roots::Parameters;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("r0 = {r0} is not a horizon: |Δ_r(r0)| = {residual} exceeds {tolerance}")]
    NotAHorizon {
        r0: f64,
        residual: f64,
        tolerance: f64,
    },
}

/// An axisymmetric metric `A(θ)dθ² + B(θ)dφ²` on a topological 2-sphere.
pub trait AxisymmetricMetric {
    /// `(A(θ), B(θ))` for `θ ∈ (0, π)`.
    fn coefficients(&self, theta: f64) -> (f64, f64);
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossSectionMetric {
    pub r0: f64,
    pub a: f64,
    pub lambda: f64,
    pub xi: f64,
}

impl CrossSectionMetric {
    /// Round sphere of radius `r0`.
    pub fn round(r0: f64) -> Self {
        Self {
            r0,
            a: 0.0,
            lambda: 0.0,
            xi: 1.0,
        }
    }

    pub fn a_coeff(&self, theta: f64) -> f64 {
        if self.a == 0.0 {
            return self.r0 * self.r0;
        }
        let c2 = theta.cos().powi(2);
        let rho2 = self.r0 * self.r0 + self.a * self.a * c2;
        let delta_theta = 1.0 + self.lambda / 3.0 * self.a * self.a * c2;
        rho2 / delta_theta
    }

    pub fn b_coeff(&self, theta: f64) -> f64 {
        let s2 = theta.sin().powi(2);
        if self.a == 0.0 {
            return self.r0 * self.r0 * s2;
        }
        let c2 = theta.cos().powi(2);
        let a2 = self.a * self.a;
        let rho2 = self.r0 * self.r0 + a2 * c2;
        let delta_theta = 1.0 + self.lambda / 3.0 * a2 * c2;
        let sum = self.r0 * self.r0 + a2;
        delta_theta * s2 * sum * sum / (rho2 * self.xi * self.xi)
    }

    /// `4π(r0² + a²)/Ξ`.
    pub fn area(&self) -> f64 {
        4.0 * PI * (self.r0 * self.r0 + self.a * self.a) / self.xi
    }
}

impl AxisymmetricMetric for CrossSectionMetric {
    fn coefficients(&self, theta: f64) -> (f64, f64) {
        (self.a_coeff(theta), self.b_coeff(theta))
    }
}

/// Cross-section of the horizon at `r0`, which must pass the root residual gate.
pub fn cross_section(params: &Parameters, r0: f64) -> Result<CrossSectionMetric, GeometryError> {
    let poly = params.polynomial();
    let residual = poly.eval(r0).abs();
    let tolerance = poly.residual_tolerance(r0);
    if !(residual <= tolerance) {
        return Err(GeometryError::NotAHorizon {
            r0,
            residual,
            tolerance,
        });
    }
    Ok(CrossSectionMetric {
        r0,
        a: params.a,
        lambda: params.lambda,
        xi: params.xi(),
    })
}

/// Charge of the cross-section, `𝒬(Σ) = q/Ξ`.
pub fn surface_charge(params: &Parameters) -> f64 {
    params.physical_charge()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AreaCharge {
    pub area: f64,
    pub charge: f64,
}

pub fn area_charge(params: &Parameters, metric: &CrossSectionMetric) -> AreaCharge {
    AreaCharge {
        area: metric.area(),
        charge: surface_charge(params),
    }
}
