//! Closed-form spectrum of the symmetrized stability operator on a static
//! horizon cross-section.
//!
//! For `a = 0` the horizon is a round sphere of radius `r0`, the shear
//! `χ₊` vanishes and the potential is the constant
//! `1/r0² − Λ − Q²/r0⁴`, so the operator `−Δ + b` has eigenvalues
//!
//! ```text
//! λ_{k+1} = k(k+1)/r0² + 1/r0² − Λ − Q²/r0⁴,   multiplicity 2k + 1.
//! ```
//!
//! Instability of the full (non-self-adjoint) operator `L` is inferred from
//! `λ1(L) ≤ λ1(L_s)`, the comparison used for the instability corollary. The
//! background discussion states the comparison in the opposite direction;
//! only the instability direction is implemented and `L` is never built.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Eigenvalues with `|λ| <= ZERO_REL_TOL * max(1, |λ2 − λ1|)` count as zero.
pub const ZERO_REL_TOL: f64 = 1e-10;

/// Hard cap on the number of modes enumerated by [`index_and_flags`].
pub const MAX_MODE: u32 = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("horizon radius must be positive and finite, got {0}")]
    InvalidRadius(f64),
    #[error("no positive eigenvalue among the first {MAX_MODE} modes (non-finite input?)")]
    ModeCapExceeded,
    #[error("charge parameter out of range: need Q > 0 and Q²Λ <= 1/4, got Q = {charge}, Λ = {lambda}")]
    ChargeOutOfRange { lambda: f64, charge: f64 },
    #[error("{0} is not a positive Kerr-de Sitter root: 1 - Λr²/3 = {1} is not positive")]
    NotAPositiveRoot(f64, f64),
}

/// Closed-form `λ_{k+1}` of `L_s(0)`.
pub fn ls_eigenvalue(r0: f64, lambda: f64, charge: f64, k: u32) -> f64 {
    let k = f64::from(k);
    let r2 = r0 * r0;
    (k * (k + 1.0) + 1.0) / r2 - lambda - charge * charge / (r2 * r2)
}

/// `2k + 1`.
pub fn multiplicity(k: u32) -> u32 {
    2 * k + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mode {
    pub k: u32,
    pub multiplicity: u32,
    pub value: f64,
}

/// First `count` modes `k = 0..count`.
pub fn spectrum_modes(r0: f64, lambda: f64, charge: f64, count: u32) -> Vec<Mode> {
    (0..count)
        .map(|k| Mode {
            k,
            multiplicity: multiplicity(k),
            value: ls_eigenvalue(r0, lambda, charge, k),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub r0: f64,
    pub lambda: f64,
    pub charge: f64,
    /// Modes up to and including the first positive one (at least two).
    pub modes: Vec<Mode>,
    pub lambda1: f64,
    pub lambda2: f64,
    /// Negative eigenvalues counted with multiplicity.
    pub index: u32,
    pub stable_symmetrized: bool,
    pub degenerate: bool,
    /// `λ1(L_s) < 0` and therefore `λ1(L) < 0`.
    pub unstable_full: bool,
    pub zero_tolerance: f64,
}

/// Enumerates modes until the spectrum turns positive and counts the index.
pub fn index_and_flags(r0: f64, lambda: f64, charge: f64) -> Result<SpectrumReport, SpectrumError> {
    if !(r0.is_finite() && r0 > 0.0) {
        return Err(SpectrumError::InvalidRadius(r0));
    }
    let lambda1 = ls_eigenvalue(r0, lambda, charge, 0);
    let lambda2 = ls_eigenvalue(r0, lambda, charge, 1);
    let zero_tolerance = ZERO_REL_TOL * (lambda2 - lambda1).abs().max(1.0);
    let is_zero = |v: f64| v.abs() <= zero_tolerance;

    let mut modes = Vec::new();
    let mut index = 0;
    let mut degenerate = false;
    for k in 0..=MAX_MODE {
        let value = ls_eigenvalue(r0, lambda, charge, k);
        let mode = Mode {
            k,
            multiplicity: multiplicity(k),
            value,
        };
        modes.push(mode);
        if is_zero(value) {
            degenerate = true;
        } else if value < 0.0 {
            index += mode.multiplicity;
        }
        if value > zero_tolerance && k >= 1 {
            let stable_symmetrized = lambda1 >= 0.0 || is_zero(lambda1);
            return Ok(SpectrumReport {
                r0,
                lambda,
                charge,
                modes,
                lambda1,
                lambda2,
                index,
                stable_symmetrized,
                degenerate,
                unstable_full: !stable_symmetrized,
                zero_tolerance,
            });
        }
    }
    Err(SpectrumError::ModeCapExceeded)
}

/// Sign regions of `λ1` and `λ2` in the variable `x = r0²`.
///
/// `λ1 = u(x)/x²` with `u(x) = −Λx² + x − Q²`, and `λ2 = v(x)/x²` with
/// `v(x) = −Λx² + 3x − Q²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignRegions {
    pub lambda: f64,
    pub charge: f64,
    pub u_roots: (f64, f64),
    pub v_roots: (f64, f64),
}

impl SignRegions {
    pub fn new(lambda: f64, charge: f64) -> Result<Self, SpectrumError> {
        let ql = lambda * charge * charge;
        if !(lambda > 0.0) || !(ql <= 0.25) {
            return Err(SpectrumError::ChargeOutOfRange { lambda, charge });
        }
        let su = (1.0 - 4.0 * ql).sqrt();
        let sv = (9.0 - 4.0 * ql).sqrt();
        Ok(Self {
            lambda,
            charge,
            u_roots: ((1.0 - su) / (2.0 * lambda), (1.0 + su) / (2.0 * lambda)),
            v_roots: ((3.0 - sv) / (2.0 * lambda), (3.0 + sv) / (2.0 * lambda)),
        })
    }

    pub fn u(&self, x: f64) -> f64 {
        -self.lambda * x * x + x - self.charge * self.charge
    }

    pub fn v(&self, x: f64) -> f64 {
        -self.lambda * x * x + 3.0 * x - self.charge * self.charge
    }

    /// Radius interval `I = (√u₊, √v₊)` that contains the cosmological
    /// horizon under the mass hypotheses.
    pub fn interval(&self) -> (f64, f64) {
        (self.u_roots.1.sqrt(), self.v_roots.1.sqrt())
    }

    /// Predicted sign of `λ1` at `r0` (`None` on a boundary).
    pub fn lambda1_negative(&self, r0: f64) -> Option<bool> {
        classify(r0 * r0, self.u_roots)
    }

    pub fn lambda2_negative(&self, r0: f64) -> Option<bool> {
        classify(r0 * r0, self.v_roots)
    }
}

fn classify(x: f64, (lo, hi): (f64, f64)) -> Option<bool> {
    if x == lo || x == hi {
        None
    } else {
        Some(x < lo || x > hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DegenerateMass {
    pub mass: f64,
    pub radius: f64,
}

/// Mass at which `λ2` vanishes at the cosmological horizon, together with
/// that horizon's radius `((3 + √(9 − 4ΛQ²))/(2Λ))^{1/2}`.
pub fn degenerate_mass(lambda: f64, charge: f64) -> Result<DegenerateMass, SpectrumError> {
    if !(charge > 0.0) || !(lambda > 0.0) || lambda * charge * charge > 0.25 {
        return Err(SpectrumError::ChargeOutOfRange { lambda, charge });
    }
    let x = (3.0 + (9.0 - 4.0 * lambda * charge * charge).sqrt()) / (2.0 * lambda);
    let radius = x.sqrt();
    Ok(DegenerateMass {
        mass: 2.0 * charge * charge / 3.0 / radius,
        radius,
    })
}

/// `λ2 = 3/r0² − Λ` for an uncharged horizon, certified by `1 − Λr0²/3 > 0`.
pub fn kds_lambda2(r0: f64, lambda: f64) -> Result<f64, SpectrumError> {
    let cert = 1.0 - lambda * r0 * r0 / 3.0;
    if !(r0 > 0.0) || !(cert > 0.0) {
        return Err(SpectrumError::NotAPositiveRoot(r0, cert));
    }
    Ok(3.0 / (r0 * r0) - lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_sphere_values() {
        assert_eq!(ls_eigenvalue(1.0, 1.0, 0.0, 0), 0.0);
        assert_eq!(ls_eigenvalue(1.0, 1.0, 0.0, 1), 2.0);
    }

    #[test]
    fn spacing_between_modes() {
        let r0 = 0.7;
        for k in 0..10u32 {
            let gap = ls_eigenvalue(r0, 2.0, 0.1, k + 1) - ls_eigenvalue(r0, 2.0, 0.1, k);
            let want = f64::from(2 * k + 2) / (r0 * r0);
            assert!((gap - want).abs() < 1e-12 * want);
        }
    }

    #[test]
    fn stable_band_has_index_zero() {
        let s = SignRegions::new(3.0, 0.1).unwrap();
        let r0 = (0.5 * (s.u_roots.0 + s.u_roots.1)).sqrt();
        let rep = index_and_flags(r0, 3.0, 0.1).unwrap();
        assert!(rep.lambda1 > 0.0);
        assert_eq!(rep.index, 0);
        assert!(rep.stable_symmetrized);
        assert!(!rep.unstable_full);
    }

    #[test]
    fn small_radius_counts_multiplicities() {
        // r0 far below both u and v roots: λ1, λ2 negative, λ3 sign decides.
        let rep = index_and_flags(0.05, 3.0, 0.1).unwrap();
        assert!(rep.lambda1 < 0.0 && rep.lambda2 < 0.0);
        let negatives: u32 = rep
            .modes
            .iter()
            .filter(|m| m.value < 0.0)
            .map(|m| m.multiplicity)
            .sum();
        assert_eq!(rep.index, negatives);
        assert!(rep.index >= 4);
    }

    #[test]
    fn degenerate_mass_example() {
        let d = degenerate_mass(3.0, 0.1).unwrap();
        assert!((d.radius - 0.99832633986005698).abs() < 1e-15);
        assert!((d.mass - 0.0066778431064948003).abs() < 1e-16);
        let rep = index_and_flags(d.radius, 3.0, 0.1).unwrap();
        assert_eq!(rep.index, 1);
        assert!(rep.degenerate);
        assert!(rep.lambda1 < 0.0);
        let s = SignRegions::new(3.0, 0.1).unwrap();
        assert!(s.v(d.radius * d.radius).abs() < 1e-14);
        assert!(degenerate_mass(3.0, 0.0).is_err());
        assert!(degenerate_mass(3.0, 0.5).is_err());
    }

    #[test]
    fn kds_certificate() {
        let l2 = kds_lambda2(0.87888506624997282, 3.0).unwrap();
        assert!((l2 - 0.8838020304589725).abs() < 1e-13);
        assert!(matches!(
            kds_lambda2(1.0, 3.0),
            Err(SpectrumError::NotAPositiveRoot(..))
        ));
        assert!(kds_lambda2(-0.5, 3.0).is_err());
    }

    #[test]
    fn nan_radius_rejected() {
        assert!(index_and_flags(f64::NAN, 3.0, 0.1).is_err());
        assert!(matches!(
            index_and_flags(1.0, f64::NAN, 0.1),
            Err(SpectrumError::ModeCapExceeded)
        ));
    }
}
