//! Seeded randomized invariant suite behind the `check` subcommand.
//!
//! Static draws take `Λ` log-uniform in `[0.1, 10]`, `Q²Λ` uniform in
//! `(0, 1/4)`, and `m` uniform between the mass threshold and `m_max`.

use crate::area_charge;
use crate::axisym_eigensolver::{solve_surface, Potential};
use crate::horizon_geometry::CrossSectionMetric;
use crate::horizon_roots::{mass_hypothesis, mass_window, HorizonPolynomial, HorizonSet, Parameters};
use crate::mots_spectrum::{degenerate_mass, index_and_flags, ls_eigenvalue, SignRegions};
use crate::report::{Cell, Table};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED_ENV: &str = "HORIZON_SPECTRA_SEED";
pub const DEFAULT_SEED: u64 = 1729;
pub const DEFAULT_DRAWS: usize = 10_000;

/// Seed from `HORIZON_SPECTRA_SEED`, or the default when unset.
pub fn seed_from_env() -> Result<u64, String> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|e| format!("{SEED_ENV}=`{s}`: {e}")),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaticDraw {
    pub lambda: f64,
    pub charge: f64,
    pub m: f64,
}

impl StaticDraw {
    pub fn parameters(&self) -> Parameters {
        Parameters::new(self.lambda, self.m, self.charge, 0.0).expect("draws are valid parameters")
    }
}

/// `(Λ, Q)` with `Q²Λ` strictly inside `(0, 1/4)`.
pub fn sample_lambda_charge<R: Rng>(rng: &mut R) -> (f64, f64) {
    let lambda = 10f64.powf(rng.gen_range(-1.0..1.0));
    let ql = rng.gen_range(1e-6..0.25);
    (lambda, (ql / lambda).sqrt())
}

/// A draw satisfying both mass hypotheses, or `None` if the threshold
/// meets the window edge.
pub fn sample_static<R: Rng>(rng: &mut R) -> Option<StaticDraw> {
    let (lambda, charge) = sample_lambda_charge(rng);
    let m_max = mass_window(lambda, charge).ok()?.m_max;
    let threshold = mass_hypothesis(lambda, charge, m_max).threshold;
    if !(threshold < m_max) {
        return None;
    }
    let m = rng.gen_range(threshold..m_max);
    let d = StaticDraw { lambda, charge, m };
    (mass_hypothesis(lambda, charge, m).holds && m < m_max).then_some(d)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            first_failure: self.first_failure,
        }
    }
}

fn sign_pattern_holds(poly: &HorizonPolynomial, h: &HorizonSet) -> bool {
    let r = h.roots();
    let span = r[3] - r[0];
    let probes = [
        (r[0] - span, -1.0),
        (0.5 * (r[0] + r[1]), 1.0),
        (0.5 * (r[1] + r[2]), -1.0),
        (0.5 * (r[2] + r[3]), 1.0),
        (r[3] + span, -1.0),
    ];
    probes.iter().all(|&(x, s)| poly.eval(x) * s > 0.0)
}

/// Runs every check; `draws` sets the size of the static sample.
pub fn run_suite(seed: u64, draws: usize) -> Vec<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut residuals = Tally::new("root_residuals");
    let mut vieta = Tally::new("root_sum_vanishes");
    let mut interlacing = Tally::new("critical_point_interlacing");
    let mut signs = Tally::new("sign_pattern");
    let mut concavity = Tally::new("derivative_decreasing_beyond_inflection");
    let mut interval = Tally::new("cosmological_horizon_in_interval");
    let mut theorem = Tally::new("index_one_at_cosmological_horizon");
    let mut sign_table = Tally::new("eigenvalue_sign_regions");
    let mut identity = Tally::new("area_charge_spectral_identity");
    let mut remark = Tally::new("area_charge_consequences");
    let mut threshold = Tally::new("threshold_below_m_max");
    let mut degenerate = Tally::new("degenerate_boundary");

    for _ in 0..draws {
        let (lambda, charge) = sample_lambda_charge(&mut rng);
        let m_max = mass_window(lambda, charge).expect("charge bound holds").m_max;
        let thr = mass_hypothesis(lambda, charge, m_max).threshold;
        threshold.record(thr < m_max, || format!("Λ={lambda} Q={charge}: {thr} ≥ {m_max}"));

        let dm = degenerate_mass(lambda, charge).expect("charge bound holds");
        let f = HorizonPolynomial::static_form(lambda, dm.mass, charge);
        let l2 = ls_eigenvalue(dm.radius, lambda, charge, 1);
        degenerate.record(
            f.is_root(dm.radius) && l2.abs() <= 1e-10,
            || format!("Λ={lambda} Q={charge}: f={} λ2={l2}", f.eval(dm.radius)),
        );

        let Some(d) = sample_static(&mut rng) else {
            continue;
        };
        let p = d.parameters();
        let poly = p.polynomial();
        let Ok(h) = p.horizons() else {
            continue;
        };
        let tag = || format!("Λ={} m={} Q={}", d.lambda, d.m, d.charge);

        residuals.record(h.roots().iter().all(|&r| poly.is_root(r)), tag);
        let sum: f64 = h.roots().iter().sum();
        vieta.record(sum.abs() <= 1e-12 * h.scale() * 4.0, || format!("{}: Σr = {sum}", tag()));
        interlacing.record(h.critical.interlaces(&h), tag);
        signs.record(sign_pattern_holds(&poly, &h), tag);
        let rh = h.critical.rhat2;
        let step = (h.r_c - rh) / 16.0;
        let decreasing = (0..16).all(|i| {
            let x = rh + step * (i as f64 + 0.5);
            poly.eval_d1(x + 0.25 * step) < poly.eval_d1(x - 0.25 * step)
        });
        concavity.record(decreasing, tag);

        let regions = SignRegions::new(d.lambda, d.charge).expect("charge bound holds");
        let (lo, hi) = regions.interval();
        interval.record(lo < h.r_c && h.r_c < hi, || format!("{}: r_c={} I=({lo}, {hi})", tag(), h.r_c));

        match index_and_flags(h.r_c, d.lambda, d.charge) {
            Ok(s) => {
                theorem.record(
                    s.index == 1 && s.lambda1 < 0.0 && s.lambda2 > 0.0,
                    || format!("{}: λ1={} λ2={} index={}", tag(), s.lambda1, s.lambda2, s.index),
                );
                let ok = regions.lambda1_negative(h.r_c) == Some(s.lambda1 < 0.0)
                    && regions.lambda2_negative(h.r_c) == Some(s.lambda2 < 0.0);
                sign_table.record(ok, tag);
            }
            Err(e) => theorem.record(false, || format!("{}: {e}", tag())),
        }

        match area_charge::horizon_crosscheck(&p) {
            Ok(x) => {
                identity.record(x.identity_holds, || format!("{}: discrepancy {}", tag(), x.discrepancy));
                let r = &x.report;
                let implied = !r.holds || (r.charge_bound_ok && r.area_in_window);
                remark.record(implied, tag);
            }
            Err(e) => identity.record(false, || format!("{}: {e}", tag())),
        }
    }

    let mut out: Vec<CheckOutcome> = [
        residuals, vieta, interlacing, signs, concavity, interval, theorem, sign_table, identity,
        remark, threshold, degenerate,
    ]
    .into_iter()
    .map(Tally::finish)
    .collect();
    out.push(round_sphere_check());
    out
}

/// Numeric spectrum of the round sphere against `k(k+1)/r0² + V`.
fn round_sphere_check() -> CheckOutcome {
    let mut t = Tally::new("round_sphere_eigensolver");
    for (r0, v) in [(1.0, 0.0), (0.8, -1.5)] {
        let metric = CrossSectionMetric::round(r0);
        match solve_surface(&metric, &Potential::Constant(v), 64, 9) {
            Ok(spec) => {
                let exact = [0u32, 1, 1, 1, 2, 2, 2, 2, 2].map(|k| f64::from(k * (k + 1)) / (r0 * r0) + v);
                let err = spec
                    .eigenvalues()
                    .iter()
                    .zip(exact)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                t.record(err < 1e-4, || format!("r0={r0} V={v}: error {err}"));
            }
            Err(e) => t.record(false, || e.to_string()),
        }
    }
    t.finish()
}

pub fn summary_table(outcomes: &[CheckOutcome]) -> Table {
    let mut t = Table::new(&["check", "cases", "failures", "passed", "first_failure"]);
    for o in outcomes {
        t.push(vec![
            o.name.into(),
            o.cases.into(),
            o.failures.into(),
            o.passed().into(),
            o.first_failure.as_deref().map_or(Cell::Empty, Cell::from),
        ]);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes_and_is_reproducible() {
        let a = run_suite(7, 300);
        assert!(a.iter().all(CheckOutcome::passed), "{a:#?}");
        assert_eq!(a, run_suite(7, 300));
    }

    #[test]
    fn static_draws_respect_hypotheses() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            if let Some(d) = sample_static(&mut rng) {
                assert!(d.charge * d.charge * d.lambda < 0.25);
                assert!(mass_window(d.lambda, d.charge).unwrap().contains(d.m));
                assert!(mass_hypothesis(d.lambda, d.charge, d.m).holds);
            }
        }
    }
}
