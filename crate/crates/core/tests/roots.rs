mod common;

use common::{delta_r, gauss_legendre, integrate, oracle_extremal_mass, oracle_roots, oracle_threshold};
use horizon_spectra::horizon_roots::{
    mass_hypothesis, mass_window, HorizonKind, HorizonPolynomial, Inadmissibility, Parameters, RootError,
};
use proptest::prelude::*;

fn static_draw() -> impl Strategy<Value = (f64, f64, f64)> {
    (-1.0f64..1.0, 1e-6f64..0.25, 0.0f64..1.0).prop_map(|(t, ql, frac)| {
        let lambda = 10f64.powf(t);
        let q = (ql / lambda).sqrt();
        let lo = oracle_threshold(lambda, q);
        let hi = oracle_extremal_mass(lambda, q);
        (lambda, q, lo + frac * (hi - lo))
    })
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn oracles_agree_with_closed_forms() {
    let gl = gauss_legendre(12);
    assert!((gl.1.iter().sum::<f64>() - 2.0).abs() < 1e-14);
    let i = integrate(|t| t.powi(22), -1.0, 1.0, &gl);
    assert!((i - 2.0 / 23.0).abs() < 1e-14);
    let r = oracle_roots(3.0, 0.1, 0.1, 0.0);
    assert_eq!(r.len(), 4);
    assert!((r[3] - 0.88729833462074168).abs() < 1e-15);
    let m2 = (1.0 + 12.0 * 0.03 + (1.0f64 - 0.12).powf(1.5)) / 54.0;
    assert!((oracle_extremal_mass(3.0, 0.1) - m2.sqrt()).abs() < 1e-15);
}

#[test]
fn reference_roots() {
    let cases: [((f64, f64, f64, f64), [f64; 4]); 4] = [
        (
            (3.0, 0.1, 0.1, 0.0),
            [-1.0916079783099616, 0.091607978309961609, 0.11270166537925832, 0.88729833462074168],
        ),
        (
            (3.0, 0.1, 0.1, 0.01),
            [-1.0916011837867816, 0.099764240602981332, 0.10452117285306442, 0.88731577033073589],
        ),
        (
            (3.0, 0.1, 0.0, 0.01),
            [-1.0880272935970532, 0.00050125616275899675, 0.20862132026605736, 0.87890471716823679],
        ),
        (
            (3.0, 0.1, 0.0, 0.05),
            [-1.0878686405839536, 0.01339468414369533, 0.19510011836977601, 0.87937383807048228],
        ),
    ];
    for ((l, m, q, a), expected) in cases {
        let h = Parameters::new(l, m, q, a).unwrap().horizons().unwrap();
        assert!(h.admissible);
        for (got, want) in h.roots().iter().zip(expected) {
            assert!(close(*got, want, 1e-10 * want.abs()), "{got} vs {want}");
        }
    }
}

#[test]
fn uncharged_static_has_exact_zero_root() {
    let h = Parameters::new(3.0, 0.1, 0.0, 0.0).unwrap().horizons().unwrap();
    assert_eq!(h.kind, HorizonKind::UnchargedStatic);
    assert!(!h.admissible);
    assert_eq!(h.r_minus, 0.0);
    assert!(close(h.r_c, 0.87888506624997282, 1e-15));
}

#[test]
fn too_few_roots_is_reported() {
    for (l, m, q, a) in [(3.0, 10.0, 0.1, 0.0), (3.0, 0.05, 0.1, 0.0), (3.0, 0.1, 0.1, 0.02)] {
        let err = Parameters::new(l, m, q, a).unwrap().horizons().unwrap_err();
        match err {
            RootError::NotAdmissible { reason, real_roots } => {
                assert_eq!(reason, Inadmissibility::RootsNotDistinct);
                assert_eq!(real_roots.len(), oracle_roots(l, m, q, a).len());
            }
            other => panic!("{other:?}"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn roots_interlace_with_critical_points((lambda, q, m) in static_draw()) {
        let p = Parameters::new(lambda, m, q, 0.0).unwrap();
        if let Ok(h) = p.horizons() {
            prop_assert!(h.critical.interlaces(&h), "{:?}", h);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn roots_match_independent_oracle((lambda, q, m) in static_draw()) {
        let p = Parameters::new(lambda, m, q, 0.0).unwrap();
        let oracle = oracle_roots(lambda, m, q, 0.0);
        match p.horizons() {
            Ok(h) => {
                prop_assert_eq!(oracle.len(), 4);
                for (got, want) in h.roots().iter().zip(&oracle) {
                    prop_assert!(close(*got, *want, 1e-11 * h.scale()), "{} vs {}", got, want);
                }
            }
            Err(RootError::NotAdmissible { real_roots, .. }) => {
                prop_assert_eq!(real_roots.len(), oracle.len());
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn root_sum_and_residuals((lambda, q, m) in static_draw()) {
        let p = Parameters::new(lambda, m, q, 0.0).unwrap();
        if let Ok(h) = p.horizons() {
            let sum: f64 = h.roots().iter().sum();
            prop_assert!(sum.abs() <= 4e-12 * h.scale(), "Σr = {}", sum);
            for r in h.roots() {
                let tol = 1e-12 * (lambda * r.powi(4) / 3.0).max(1.0);
                prop_assert!(delta_r(lambda, m, q, 0.0, r).abs() <= tol);
            }
        }
    }

    #[test]
    fn sign_pattern_between_roots((lambda, q, m) in static_draw()) {
        let p = Parameters::new(lambda, m, q, 0.0).unwrap();
        if let Ok(h) = p.horizons() {
            let r = h.roots();
            let f = |x: f64| delta_r(lambda, m, q, 0.0, x);
            prop_assert!(r[0] < 0.0 && r[1] > 0.0);
            prop_assert!(f(0.5 * (r[0] + r[1])) > 0.0);
            prop_assert!(f(0.5 * (r[1] + r[2])) < 0.0);
            prop_assert!(f(0.5 * (r[2] + r[3])) > 0.0);
            prop_assert!(f(r[3] + 1.0) < 0.0);
        }
    }

    #[test]
    fn derivative_decreases_beyond_inflection((lambda, q, m) in static_draw(), t in 0.0f64..1.0) {
        let poly = HorizonPolynomial::static_form(lambda, m, q);
        let (_, rhat2) = poly.inflection_points().unwrap();
        prop_assert!(close(rhat2, (1.0 / (2.0 * lambda)).sqrt(), 1e-14 * rhat2));
        let r = rhat2 * (1.0 + 4.0 * t) + 1e-9;
        prop_assert!(poly.eval_d2(r) < 0.0);
        prop_assert!(close(poly.eval_d2(r), 2.0 - 4.0 * lambda * r * r, 1e-12 * (1.0 + 4.0 * lambda * r * r)));
    }

    #[test]
    fn mass_window_matches_double_root((lambda, q, _m) in static_draw()) {
        let w = mass_window(lambda, q).unwrap();
        let oracle = oracle_extremal_mass(lambda, q);
        prop_assert!(close(w.m_max, oracle, 1e-12 * oracle.max(1e-300)), "{} vs {}", w.m_max, oracle);
        let hyp = mass_hypothesis(lambda, q, w.m_max);
        prop_assert!(close(hyp.threshold, oracle_threshold(lambda, q), 1e-14 * hyp.threshold));
        prop_assert!(hyp.threshold < w.m_max);
    }

    #[test]
    fn expanded_polynomial_matches_product_form(
        lambda in 0.1f64..10.0,
        m in 0.01f64..1.0,
        q in 0.0f64..0.5,
        a in 0.0f64..0.3,
        r in -3.0f64..3.0,
    ) {
        let poly = Parameters::new(lambda, m, q, a).unwrap().polynomial();
        let direct = delta_r(lambda, m, q, a, r);
        let scale = 1.0 + lambda * r.powi(4) + r * r + m.abs() * r.abs();
        prop_assert!(close(poly.eval(r), direct, 1e-14 * scale));
        let c = poly.coefficients();
        prop_assert_eq!(c[1], 0.0);
    }
}

#[test]
fn rotating_roots_match_oracle() {
    for a in [0.0025, 0.005, 0.01] {
        let p = Parameters::new(3.0, 0.1, 0.1, a).unwrap();
        let h = p.horizons().unwrap();
        let oracle = oracle_roots(3.0, 0.1, 0.1, a);
        assert_eq!(oracle.len(), 4);
        for (got, want) in h.roots().iter().zip(&oracle) {
            assert!(close(*got, *want, 1e-12), "a = {a}: {got} vs {want}");
        }
    }
}
