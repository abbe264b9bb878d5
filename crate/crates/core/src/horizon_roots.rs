//! Horizon polynomial of the Kerr-Newman-de Sitter family and isolation of
//! its real roots.
//!
//! The horizons of the metric sit at the zeros of
//!
//! ```text
//! Δ_r(r) = (r² + a²)(1 − Λr²/3) − 2mr + q²
//!        = −(Λ/3) r⁴ + (1 − Λa²/3) r² − 2m r + (a² + q²)
//! ```
//!
//! The cubic coefficient vanishes identically, so the four roots always sum
//! to zero. Roots are bracketed between the critical points of the quartic
//! (the derivative is a depressed cubic, solved in closed form), refined by
//! bisection and polished with a few guarded Newton steps.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

/// Relative width at which bisection hands over to Newton polishing.
const BISECTION_REL_TOL: f64 = 1e-13;
const MAX_BISECTION_STEPS: usize = 200;
const MAX_NEWTON_STEPS: usize = 5;

/// Two roots closer than `DISTINCT_REL_TOL * max(1, |r_c|)` are not distinct.
pub const DISTINCT_REL_TOL: f64 = 1e-9;

/// Residual gate: `|Δ_r(r)| <= RESIDUAL_REL_TOL * max(1, Λ r⁴ / 3)`.
pub const RESIDUAL_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParameterError {
    #[error("cosmological constant must be positive and finite, got {0}")]
    Lambda(f64),
    #[error("mass parameter must be positive and finite, got {0}")]
    Mass(f64),
    #[error("charge parameter must be non-negative and finite, got {0}")]
    Charge(f64),
    #[error("rotation parameter must be non-negative and finite, got {0}")]
    Rotation(f64),
}

/// Why a parameter set falls outside the four-horizon regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Inadmissibility {
    /// `Q²Λ > 1/4`.
    ChargeTooLarge,
    /// Mass outside the static four-root window.
    MassOutOfWindow,
    /// Fewer than four real roots, or two of them closer than the gate.
    RootsNotDistinct,
    /// Four roots exist but not with the sign pattern `r_mm < 0 < r_minus`.
    OrderingViolation,
}

impl Inadmissibility {
    /// Stable reason code used in scan output.
    pub fn code(self) -> &'static str {
        match self {
            Inadmissibility::ChargeTooLarge => "CHARGE_TOO_LARGE",
            Inadmissibility::MassOutOfWindow => "MASS_OUT_OF_WINDOW",
            Inadmissibility::RootsNotDistinct => "ROOTS_NOT_DISTINCT",
            Inadmissibility::OrderingViolation => "ORDERING_VIOLATION",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("parameters outside the four-horizon regime ({}): real roots {real_roots:?}", reason.code())]
    NotAdmissible {
        reason: Inadmissibility,
        real_roots: Vec<f64>,
    },
    #[error("charge too large: Q²Λ = {0} exceeds 1/4")]
    ChargeTooLarge(f64),
}

/// Spacetime parameters `(Λ, m, q, a)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub lambda: f64,
    pub m: f64,
    pub q: f64,
    pub a: f64,
}

impl Parameters {
    pub fn new(lambda: f64, m: f64, q: f64, a: f64) -> Result<Self, ParameterError> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(ParameterError::Lambda(lambda));
        }
        if !(m.is_finite() && m > 0.0) {
            return Err(ParameterError::Mass(m));
        }
        if !(q.is_finite() && q >= 0.0) {
            return Err(ParameterError::Charge(q));
        }
        if !(a.is_finite() && a >= 0.0) {
            return Err(ParameterError::Rotation(a));
        }
        Ok(Self { lambda, m, q, a })
    }

    /// Same spacetime with a different rotation parameter.
    pub fn with_rotation(self, a: f64) -> Result<Self, ParameterError> {
        Self::new(self.lambda, self.m, self.q, a)
    }

    /// `Ξ = 1 + Λa²/3`.
    pub fn xi(&self) -> f64 {
        if self.a == 0.0 {
            1.0
        } else {
            1.0 + self.lambda * self.a * self.a / 3.0
        }
    }

    pub fn angular_momentum(&self) -> f64 {
        let xi = self.xi();
        self.a * self.m / (xi * xi)
    }

    pub fn physical_mass(&self) -> f64 {
        let xi = self.xi();
        self.m / (xi * xi)
    }

    /// `𝒬 = q/Ξ`; equals `q` when `a = 0`.
    pub fn physical_charge(&self) -> f64 {
        self.q / self.xi()
    }

    pub fn polynomial(&self) -> HorizonPolynomial {
        HorizonPolynomial::from_parameters(self)
    }

    pub fn horizons(&self) -> Result<HorizonSet, RootError> {
        isolate_roots(&self.polynomial())
    }
}

/// Quartic `Δ_r` with coefficients stored in descending degree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HorizonPolynomial {
    coeffs: [f64; 5],
    lambda: f64,
}

impl HorizonPolynomial {
    pub fn from_parameters(p: &Parameters) -> Self {
        let a2 = p.a * p.a;
        Self {
            coeffs: [
                -p.lambda / 3.0,
                0.0,
                1.0 - p.lambda * a2 / 3.0,
                -2.0 * p.m,
                a2 + p.q * p.q,
            ],
            lambda: p.lambda,
        }
    }

    /// Static (`a = 0`) form `f(r) = −(Λ/3)r⁴ + r² − 2mr + Q²`.
    ///
    /// No admissibility checks: `mass = 0` and `charge = 0` are allowed here.
    pub fn static_form(lambda: f64, mass: f64, charge: f64) -> Self {
        Self {
            coeffs: [-lambda / 3.0, 0.0, 1.0, -2.0 * mass, charge * charge],
            lambda,
        }
    }

    pub fn coefficients(&self) -> [f64; 5] {
        self.coeffs
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * r + c)
    }

    pub fn eval_d1(&self, r: f64) -> f64 {
        let [c4, c3, c2, c1, _] = self.coeffs;
        ((4.0 * c4 * r + 3.0 * c3) * r + 2.0 * c2) * r + c1
    }

    pub fn eval_d2(&self, r: f64) -> f64 {
        let [c4, c3, c2, _, _] = self.coeffs;
        (12.0 * c4 * r + 6.0 * c3) * r + 2.0 * c2
    }

    /// Residual tolerance for a root near `r`.
    pub fn residual_tolerance(&self, r: f64) -> f64 {
        RESIDUAL_REL_TOL * (self.lambda * r.powi(4) / 3.0).max(1.0)
    }

    pub fn is_root(&self, r: f64) -> bool {
        r.is_finite() && self.eval(r).abs() <= self.residual_tolerance(r)
    }

    /// Real zeros of `Δ_r′`, ascending.
    pub fn critical_points(&self) -> Vec<f64> {
        let [c4, _, c2, c1, _] = self.coeffs;
        // 4c4 r³ + 2c2 r + c1 = 0  →  r³ + p r + s = 0
        let p = c2 / (2.0 * c4);
        let s = c1 / (4.0 * c4);
        let mut roots = depressed_cubic_roots(p, s);
        for r in roots.iter_mut() {
            *r = polish_newton(|x| self.eval_d1(x), |x| self.eval_d2(x), *r);
        }
        roots
    }

    /// Real zeros of `Δ_r″`, i.e. `±√(c2/(2Λ))` (`±√(1/(2Λ))` when `a = 0`).
    pub fn inflection_points(&self) -> Option<(f64, f64)> {
        let [c4, _, c2, _, _] = self.coeffs;
        let x2 = -c2 / (6.0 * c4);
        if x2 > 0.0 {
            let x = x2.sqrt();
            Some((-x, x))
        } else {
            None
        }
    }

    /// Cauchy bound: every real root lies in `(-bound, bound)`.
    fn root_bound(&self) -> f64 {
        let lead = self.coeffs[0].abs();
        1.0 + self.coeffs[1..]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max)
    }

    /// All real roots, ascending, each reported once.
    ///
    /// An exactly vanishing constant term is deflated symbolically: `r = 0`
    /// is returned exactly and the remaining cubic is solved separately.
    pub fn real_roots(&self) -> Vec<f64> {
        let [c4, _, c2, c1, c0] = self.coeffs;
        let bound = self.root_bound();
        if c0 == 0.0 {
            let cubic = |r: f64| (c4 * r * r + c2) * r + c1;
            let mut crit = Vec::new();
            let x2 = -c2 / (3.0 * c4);
            if x2 > 0.0 {
                crit.push(-x2.sqrt());
                crit.push(x2.sqrt());
            }
            let mut roots = bracketed_roots(cubic, |r| 3.0 * c4 * r * r + c2, &crit, bound);
            // m = 0 makes r = 0 a root of the cubic as well
            if !roots.contains(&0.0) {
                roots.push(0.0);
            }
            roots.sort_by(f64::total_cmp);
            return roots;
        }
        let crit = self.critical_points();
        bracketed_roots(|r| self.eval(r), |r| self.eval_d1(r), &crit, bound)
    }

    /// Largest real root, if any.
    pub fn cosmological_root(&self) -> Option<f64> {
        self.real_roots().last().copied()
    }
}

/// Real roots of `x³ + p x + s = 0`, ascending.
fn depressed_cubic_roots(p: f64, s: f64) -> Vec<f64> {
    if p == 0.0 {
        return vec![(-s).cbrt()];
    }
    let disc = (s / 2.0).powi(2) + (p / 3.0).powi(3);
    if disc < 0.0 {
        // three distinct real roots (p < 0 here)
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = ((3.0 * s) / (p * m)).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        let mut r: Vec<f64> = (0..3)
            .map(|k| m * (phi - 2.0 * PI * k as f64 / 3.0).cos())
            .collect();
        r.sort_by(f64::total_cmp);
        r
    } else if disc == 0.0 {
        let u = (-s / 2.0).cbrt();
        let mut r = vec![2.0 * u, -u];
        r.sort_by(f64::total_cmp);
        r.dedup();
        r
    } else {
        let sq = disc.sqrt();
        vec![(-s / 2.0 + sq).cbrt() + (-s / 2.0 - sq).cbrt()]
    }
}

fn polish_newton(f: impl Fn(f64) -> f64, df: impl Fn(f64) -> f64, mut x: f64) -> f64 {
    for _ in 0..3 {
        let d = df(x);
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let next = x - f(x) / d;
        if !next.is_finite() {
            break;
        }
        if next == x {
            break;
        }
        x = next;
    }
    x
}

/// Finds one root in every monotone segment delimited by `crit` and
/// `±bound` that shows a sign change. A critical point where `f` is exactly
/// zero is returned as a (multiple) root.
fn bracketed_roots(
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    crit: &[f64],
    bound: f64,
) -> Vec<f64> {
    let mut knots = Vec::with_capacity(crit.len() + 2);
    knots.push(-bound);
    knots.extend(crit.iter().copied().filter(|c| c.abs() < bound));
    knots.push(bound);

    let mut roots = Vec::new();
    for w in knots.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let (flo, fhi) = (f(lo), f(hi));
        if flo == 0.0 {
            if roots.last() != Some(&lo) {
                roots.push(lo);
            }
            continue;
        }
        if fhi == 0.0 {
            roots.push(hi);
            continue;
        }
        if flo.signum() != fhi.signum() {
            roots.push(bisect_then_newton(&f, &df, lo, hi, flo));
        }
    }
    roots
}

fn bisect_then_newton(
    f: &impl Fn(f64) -> f64,
    df: &impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    mut flo: f64,
) -> f64 {
    let scale = lo.abs().max(hi.abs()).max(1.0);
    for _ in 0..MAX_BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= BISECTION_REL_TOL * scale || mid == lo || mid == hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..MAX_NEWTON_STEPS {
        let fx = f(x);
        let d = df(x);
        if fx == 0.0 || d == 0.0 {
            break;
        }
        let next = x - fx / d;
        // stay inside the bracket
        if !(next >= lo && next <= hi) || next == x {
            break;
        }
        x = next;
    }
    x
}

/// Role of a root within the four-horizon pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootLabel {
    /// `r_mm`, the negative root without physical meaning.
    Negative,
    /// `r_minus`, inner (Cauchy) horizon.
    Cauchy,
    /// `r_plus`, outer (Killing) black-hole horizon.
    Killing,
    /// `r_c`, cosmological horizon.
    Cosmological,
}

pub const ROOT_LABELS: [RootLabel; 4] = [
    RootLabel::Negative,
    RootLabel::Cauchy,
    RootLabel::Killing,
    RootLabel::Cosmological,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HorizonKind {
    /// Four distinct roots with `r_mm < 0 < r_minus < r_plus < r_c`.
    Charged,
    /// `a = q = 0`: `r = 0` is an exact root, so `r_minus = 0`. This is the
    /// Schwarzschild/Kerr-de Sitter boundary of the charged pattern and is
    /// never flagged admissible, though `r_plus` and `r_c` are genuine.
    UnchargedStatic,
}

/// Roots of `Δ′` and `Δ″`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalStructure {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
    pub rhat1: f64,
    pub rhat2: f64,
}

impl CriticalStructure {
    /// `r_mm < r1 < rhat1 < 0 < r_minus < r2 < r_plus < r3 < r_c` and
    /// `rhat2 ∈ (r2, r3)`.
    pub fn interlaces(&self, h: &HorizonSet) -> bool {
        h.r_mm < self.r1
            && self.r1 < self.rhat1
            && self.rhat1 < 0.0
            && 0.0 < h.r_minus
            && h.r_minus < self.r2
            && self.r2 < h.r_plus
            && h.r_plus < self.r3
            && self.r3 < h.r_c
            && self.r2 < self.rhat2
            && self.rhat2 < self.r3
    }
}

/// The four classified real roots of `Δ_r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HorizonSet {
    pub r_mm: f64,
    pub r_minus: f64,
    pub r_plus: f64,
    pub r_c: f64,
    pub min_gap: f64,
    pub admissible: bool,
    pub kind: HorizonKind,
    pub critical: CriticalStructure,
    /// Distinctness threshold that was applied.
    pub gap_tolerance: f64,
}

impl HorizonSet {
    pub fn roots(&self) -> [f64; 4] {
        [self.r_mm, self.r_minus, self.r_plus, self.r_c]
    }

    pub fn labelled(&self) -> [(RootLabel, f64); 4] {
        let r = self.roots();
        [
            (ROOT_LABELS[0], r[0]),
            (ROOT_LABELS[1], r[1]),
            (ROOT_LABELS[2], r[2]),
            (ROOT_LABELS[3], r[3]),
        ]
    }

    /// `max(1, |r_c|)`, the scale all relative tolerances refer to.
    pub fn scale(&self) -> f64 {
        self.r_c.abs().max(1.0)
    }

    /// Positive roots (Killing and cosmological; Cauchy too when nonzero).
    pub fn positive_roots(&self) -> Vec<f64> {
        self.roots().into_iter().filter(|&r| r > 0.0).collect()
    }
}

/// Isolates and classifies the real roots of `p`.
///
/// Returns `Ok` for the charged four-root pattern (admissible) and for the
/// uncharged static boundary case (`kind = UnchargedStatic`, not admissible).
pub fn isolate_roots(p: &HorizonPolynomial) -> Result<HorizonSet, RootError> {
    let roots = p.real_roots();
    let fail = |reason| RootError::NotAdmissible {
        reason,
        real_roots: roots.clone(),
    };
    if roots.len() != 4 {
        return Err(fail(Inadmissibility::RootsNotDistinct));
    }
    let crit = p.critical_points();
    let (rhat1, rhat2) = p.inflection_points().ok_or_else(|| fail(Inadmissibility::RootsNotDistinct))?;
    if crit.len() != 3 {
        return Err(fail(Inadmissibility::RootsNotDistinct));
    }
    let scale = roots[3].abs().max(1.0);
    let gap_tolerance = DISTINCT_REL_TOL * scale;
    let min_gap = roots
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min);
    if !(min_gap > gap_tolerance) {
        return Err(fail(Inadmissibility::RootsNotDistinct));
    }
    let kind = if p.coefficients()[4] == 0.0 {
        HorizonKind::UnchargedStatic
    } else {
        HorizonKind::Charged
    };
    let ordered = roots[0] < 0.0 && 0.0 < roots[1];
    if kind == HorizonKind::Charged && !ordered {
        return Err(fail(Inadmissibility::OrderingViolation));
    }
    Ok(HorizonSet {
        r_mm: roots[0],
        r_minus: roots[1],
        r_plus: roots[2],
        r_c: roots[3],
        min_gap,
        admissible: kind == HorizonKind::Charged,
        kind,
        critical: CriticalStructure {
            r1: crit[0],
            r2: crit[1],
            r3: crit[2],
            rhat1,
            rhat2,
        },
        gap_tolerance,
    })
}

/// Open mass interval `0 < m < m_max` of the static four-root regime.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MassWindow {
    pub m_max: f64,
}

impl MassWindow {
    pub fn contains(&self, m: f64) -> bool {
        m > 0.0 && m < self.m_max
    }
}

/// `m_max² = (1/(18Λ))[1 + 12Q²Λ + (1 − 4Q²Λ)^{3/2}]`, defined for `Q²Λ ≤ 1/4`.
pub fn mass_window(lambda: f64, charge: f64) -> Result<MassWindow, RootError> {
    let ql = charge * charge * lambda;
    if ql > 0.25 {
        return Err(RootError::ChargeTooLarge(ql));
    }
    let m_max2 = (1.0 + 12.0 * ql + (1.0 - 4.0 * ql).powf(1.5)) / (18.0 * lambda);
    Ok(MassWindow {
        m_max: m_max2.sqrt(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MassHypothesis {
    pub threshold: f64,
    pub holds: bool,
}

/// Strict lower mass bound `(2Q²/3)·((3 + √(9 − 4ΛQ²))/(2Λ))^{−1/2} < m`
/// under which the second eigenvalue at the cosmological horizon is positive.
pub fn mass_hypothesis(lambda: f64, charge: f64, m: f64) -> MassHypothesis {
    let q2 = charge * charge;
    let x = (3.0 + (9.0 - 4.0 * lambda * q2).sqrt()) / (2.0 * lambda);
    let threshold = 2.0 * q2 / 3.0 / x.sqrt();
    MassHypothesis {
        threshold,
        holds: threshold < m,
    }
}
