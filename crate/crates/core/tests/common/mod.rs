//! Independent oracles for the integration tests. Nothing here calls into
//! the library's numerics.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 20_240_611;

pub fn rng() -> ChaCha8Rng {
    let seed = std::env::var("HORIZON_SPECTRA_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED);
    ChaCha8Rng::seed_from_u64(seed)
}

/// `Δ_r` in product form `(r² + a²)(1 − Λr²/3) − 2mr + q²`.
pub fn delta_r(lambda: f64, m: f64, q: f64, a: f64, r: f64) -> f64 {
    (r * r + a * a) * (1.0 - lambda * r * r / 3.0) - 2.0 * m * r + q * q
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
}

/// Real roots of `Δ_r` by sign scan on a mixed linear/geometric grid and
/// bisection to adjacent floats. Exact zeros on the grid are kept.
pub fn oracle_roots(lambda: f64, m: f64, q: f64, a: f64) -> Vec<f64> {
    let f = |r: f64| delta_r(lambda, m, q, a, r);
    let c = [
        lambda / 3.0,
        1.0 - lambda * a * a / 3.0,
        2.0 * m,
        a * a + q * q,
    ];
    let bound = 1.0 + c[1..].iter().map(|x| x.abs() / c[0]).fold(0.0, f64::max);
    let mut grid: Vec<f64> = (0..=8000)
        .map(|i| -bound + 2.0 * bound * i as f64 / 8000.0)
        .collect();
    for i in 0..=3000 {
        let t = -12.0 + (bound.log10() + 12.0) * i as f64 / 3000.0;
        grid.push(10f64.powf(t));
        grid.push(-(10f64.powf(t)));
    }
    grid.push(0.0);
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    let mut roots = Vec::new();
    for w in grid.windows(2) {
        let (fa, fb) = (f(w[0]), f(w[1]));
        if fa == 0.0 {
            roots.push(w[0]);
        } else if fa * fb < 0.0 {
            roots.push(bisect(f, w[0], w[1]));
        }
    }
    roots
}

/// Mass at which `r_+` and `r_c` merge for `a = 0`: the double root
/// satisfies `Λx² − x + Q² = 0` (x = r²) and `m = r(1 − 2Λr²/3)`.
pub fn oracle_extremal_mass(lambda: f64, q: f64) -> f64 {
    let g = |x: f64| lambda * x * x - x + q * q;
    let vertex = 1.0 / (2.0 * lambda);
    let x = bisect(g, vertex, 1.0 / lambda + 1.0);
    let r = x.sqrt();
    r * (1.0 - 2.0 * lambda * x / 3.0)
}

/// `(2Q²/3)·((3 + √(9 − 4ΛQ²))/(2Λ))^{-1/2}`.
pub fn oracle_threshold(lambda: f64, q: f64) -> f64 {
    let x = (3.0 + (9.0 - 4.0 * lambda * q * q).sqrt()) / (2.0 * lambda);
    2.0 * q * q / (3.0 * x.sqrt())
}

/// Eigenvalues of `−Δ + (1/r² − Λ − Q²/r⁴)` on the round sphere of radius r.
pub fn oracle_ls(r0: f64, lambda: f64, q: f64, k: u32) -> f64 {
    let l = f64::from(k * (k + 1));
    l / (r0 * r0) + 1.0 / (r0 * r0) - lambda - q * q / r0.powi(4)
}

/// A draw `(Λ, Q, m)` with `Q²Λ ≤ 1/4` and `threshold < m < m_max`.
pub fn draw_static<R: Rng>(rng: &mut R) -> (f64, f64, f64) {
    loop {
        let lambda = 10f64.powf(rng.gen_range(-1.0..1.0));
        let q = (rng.gen_range(0.0..0.25) / lambda).sqrt();
        let lo = oracle_threshold(lambda, q);
        let hi = oracle_extremal_mass(lambda, q);
        if lo < hi {
            let m = rng.gen_range(lo..hi);
            if lo < m {
                return (lambda, q, m);
            }
        }
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` (Newton on `P_n`).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                let (mut p0, mut p1) = (1.0, z);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                let dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
                x[i] = z;
                w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
                break;
            }
        }
    }
    (x, w)
}

pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, nodes: &(Vec<f64>, Vec<f64>)) -> f64 {
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    nodes
        .0
        .iter()
        .zip(&nodes.1)
        .map(|(x, w)| w * f(mid + half * x))
        .sum::<f64>()
        * half
}

/// Kerr-Newman-de Sitter cross-section coefficients written from the line
/// element: `A = ρ²/Δ_θ`, `B = Δ_θ sin²θ (r² + a²)²/(ρ² Ξ²)`.
pub fn knds_coefficients(lambda: f64, a: f64, r0: f64, theta: f64) -> (f64, f64) {
    let (s, c) = theta.sin_cos();
    let rho2 = r0 * r0 + a * a * c * c;
    let dt = 1.0 + lambda * a * a * c * c / 3.0;
    let xi = 1.0 + lambda * a * a / 3.0;
    let big = r0 * r0 + a * a;
    (rho2 / dt, dt * s * s * big * big / (rho2 * xi * xi))
}
