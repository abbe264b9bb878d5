mod common;

use common::{delta_r, draw_static, oracle_ls, oracle_roots, oracle_threshold, rng};
use horizon_spectra::area_charge::{self, area_window, margin, read_catalog};
use horizon_spectra::horizon_roots::Parameters;
use horizon_spectra::mots_spectrum::{
    degenerate_mass, index_and_flags, kds_lambda2, ls_eigenvalue, multiplicity, spectrum_modes, SignRegions,
};
use horizon_spectra::scan::{run_scan, scan_table, OutputFormat, ScanConfig};
use proptest::prelude::*;
use std::f64::consts::PI;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn eigenvalues_follow_the_closed_form(
        r0 in 0.05f64..5.0,
        lambda in 0.1f64..10.0,
        q in 0.0f64..1.0,
        k in 0u32..40,
    ) {
        let got = ls_eigenvalue(r0, lambda, q, k);
        let want = oracle_ls(r0, lambda, q, k);
        prop_assert!((got - want).abs() <= 1e-13 * want.abs().max(1.0 / (r0 * r0)).max(lambda));
        prop_assert_eq!(multiplicity(k), 2 * k + 1);
    }

    #[test]
    fn sign_regions_match_direct_evaluation(
        lambda in 0.1f64..10.0,
        ql in 0.0f64..0.25,
        s in 0.05f64..3.0,
    ) {
        let q = (ql / lambda).sqrt();
        let r0 = s / lambda.sqrt();
        let regions = SignRegions::new(lambda, q).unwrap();
        let x = r0 * r0;
        let u = -lambda * x * x + x - q * q;
        let v = -lambda * x * x + 3.0 * x - q * q;
        if u.abs() > 1e-12 {
            prop_assert_eq!(regions.lambda1_negative(r0), Some(u < 0.0));
            prop_assert_eq!(ls_eigenvalue(r0, lambda, q, 0) < 0.0, u < 0.0);
        }
        if v.abs() > 1e-12 {
            prop_assert_eq!(regions.lambda2_negative(r0), Some(v < 0.0));
            prop_assert_eq!(ls_eigenvalue(r0, lambda, q, 1) < 0.0, v < 0.0);
        }
    }

    #[test]
    fn area_charge_consequences(
        lambda in 0.1f64..10.0,
        area in 0.01f64..100.0,
        q in 0.0f64..2.0,
    ) {
        let r = area_charge::check(lambda, area, q).unwrap();
        if r.holds {
            prop_assert!(q * q <= 9.0 / (4.0 * lambda) * (1.0 + 1e-12));
            let (lo, hi) = area_window(lambda, q).unwrap();
            prop_assert!(lo * (1.0 - 1e-12) <= area && area <= hi * (1.0 + 1e-12));
        }
    }

    #[test]
    fn margin_is_concave_in_area_and_decreasing_in_charge(
        lambda in 0.1f64..10.0,
        area in 0.1f64..50.0,
        q in 0.0f64..1.0,
        dq in 0.001f64..0.5,
    ) {
        let h = 1e-3 * area;
        let second = margin(lambda, area + h, q) - 2.0 * margin(lambda, area, q) + margin(lambda, area - h, q);
        let expected = -32.0 * PI * PI * q * q / area.powi(3) * h * h;
        prop_assert!(second <= 1e-12 * margin(lambda, area, q).abs().max(1.0));
        prop_assert!((second - expected).abs() <= 1e-9 * (1.0 + margin(lambda, area, q).abs()));
        prop_assert!(margin(lambda, area, q + dq) < margin(lambda, area, q));
    }
}

#[test]
fn spectrum_flags_at_reference_point() {
    let r_c = 0.88729833462074168;
    let s = index_and_flags(r_c, 3.0, 0.1).unwrap();
    assert!((s.lambda1 - -1.7459666924148338).abs() < 1e-10 * 1.75);
    assert!((s.lambda2 - 0.79436638343682859).abs() < 1e-10 * 0.8);
    assert_eq!(s.index, 1);
    assert!(!s.degenerate && !s.stable_symmetrized && s.unstable_full);
    assert_eq!(s.modes.len(), 2);
    let modes = spectrum_modes(1.0, 3.0, 0.1, 4);
    let expected = [-2.01, -0.01, 3.99, 9.99];
    for (m, e) in modes.iter().zip(expected) {
        assert!((m.value - e).abs() < 1e-14);
    }
}

#[test]
fn index_counts_multiplicity() {
    // small sphere inside the u-region: several modes negative
    let s = index_and_flags(1.0, 9.0, 0.0).unwrap();
    // 1 − 9, 3 − 9, 7 − 9 negative; 13 − 9 positive
    assert_eq!(s.index, 1 + 3 + 5);
    assert!(!s.degenerate);
    let s = index_and_flags(1.0, 7.0, 0.0).unwrap();
    assert!(s.degenerate);
    assert_eq!(s.index, 1 + 3);
}

#[test]
fn theorem_holds_on_random_draws() {
    let mut rng = rng();
    let mut admissible = 0;
    for _ in 0..3_000 {
        let (lambda, q, m) = draw_static(&mut rng);
        let Ok(h) = Parameters::new(lambda, m, q, 0.0).unwrap().horizons() else {
            continue;
        };
        admissible += 1;
        let s = index_and_flags(h.r_c, lambda, q).unwrap();
        assert!(s.lambda1 < 0.0 && 0.0 < s.lambda2 && s.index == 1, "Λ={lambda} Q={q} m={m}");
        let regions = SignRegions::new(lambda, q).unwrap();
        let (lo, hi) = regions.interval();
        assert!(lo < h.r_c && h.r_c < hi);
    }
    assert!(admissible > 300, "only {admissible} admissible draws");
}

#[test]
fn degenerate_mass_boundary() {
    let mut rng = rng();
    for _ in 0..100 {
        let (lambda, q, _) = draw_static(&mut rng);
        let d = degenerate_mass(lambda, q).unwrap();
        assert!((d.mass - oracle_threshold(lambda, q)).abs() <= 1e-15 * d.mass.max(1e-300) * 4.0);
        assert!(delta_r(lambda, d.mass, q, 0.0, d.radius).abs() <= 1e-12 * (lambda * d.radius.powi(4) / 3.0).max(1.0));
        assert!(ls_eigenvalue(d.radius, lambda, q, 1).abs() <= 1e-10);
        let roots = oracle_roots(lambda, d.mass, q, 0.0);
        let largest = *roots.last().unwrap();
        assert!((largest - d.radius).abs() <= 1e-12 * d.radius.max(1.0));
    }
    assert!(degenerate_mass(3.0, 0.0).is_err());
    assert!(degenerate_mass(3.0, 1.0).is_err());
}

#[test]
fn kds_lambda2_and_certificate() {
    let mut rng = rng();
    for _ in 0..500 {
        let (lambda, _, m) = draw_static(&mut rng);
        let p = Parameters::new(lambda, m, 0.0, 0.0).unwrap();
        let Ok(h) = p.horizons() else { continue };
        for r in h.positive_roots() {
            assert!(1.0 - lambda * r * r / 3.0 > 0.0);
            assert!(r < (3.0 / lambda).sqrt());
        }
        let l2 = kds_lambda2(h.r_c, lambda).unwrap();
        assert!((l2 - oracle_ls(h.r_c, lambda, 0.0, 1)).abs() < 1e-12 * l2.abs().max(1.0));
    }
    let r = 0.87888506624997282;
    assert!((kds_lambda2(r, 3.0).unwrap() - 0.8838020304589725).abs() < 1e-13);
}

#[test]
fn identity_between_margin_and_lambda2() {
    let mut rng = rng();
    let mut seen = 0;
    while seen < 1_000 {
        let (lambda, q, m) = draw_static(&mut rng);
        let p = Parameters::new(lambda, m, q, 0.0).unwrap();
        if p.horizons().is_err() {
            continue;
        }
        seen += 1;
        let x = area_charge::horizon_crosscheck(&p).unwrap();
        let direct = 4.0 * PI * x.r_c * x.r_c * oracle_ls(x.r_c, lambda, q, 1);
        assert!((x.report.margin - direct).abs() <= 1e-10 * 12.0 * PI);
        assert!(x.identity_holds);
        assert!(x.report.holds && x.report.charge_bound_ok && x.report.area_in_window);
    }
}

#[test]
fn scan_output_feeds_the_catalog_reader() {
    let config = ScanConfig::from_toml_str("lambda = [1.0, 3.0]\nm = \"0.05:0.2:5\"\nq = [0.05, 0.1]\n").unwrap();
    let rows = run_scan(&config.validate().unwrap(), Some(2)).unwrap();
    let csv = scan_table(&rows).render(OutputFormat::Csv);
    let reports = read_catalog(csv.as_bytes()).unwrap();
    let admissible: Vec<_> = rows.iter().filter_map(|r| r.analysis()).collect();
    assert_eq!(reports.len(), admissible.len());
    assert!(!reports.is_empty());
    for (rep, row) in reports.iter().zip(admissible) {
        assert_eq!(rep.margin, row.ac_margin);
    }
}
