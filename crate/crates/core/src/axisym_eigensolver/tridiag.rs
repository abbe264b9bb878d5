//! Symmetric tridiagonal eigenproblems: Sturm-sequence bisection for
//! eigenvalues, inverse iteration for eigenvectors.
//!
//! `d` is the diagonal (length n), `e` the off-diagonal (length n − 1).

const MAX_BISECTION_STEPS: usize = 256;
const INVERSE_ITERATION_STEPS: usize = 3;

/// Number of eigenvalues strictly below `x`.
pub fn sturm_count(d: &[f64], e: &[f64], x: f64, pivot_guard: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..d.len() {
        let coupling = if i == 0 { 0.0 } else { e[i - 1] * e[i - 1] / q };
        q = d[i] - x - coupling;
        if q.abs() < pivot_guard {
            q = -pivot_guard;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
pub fn gershgorin(d: &[f64], e: &[f64]) -> (f64, f64) {
    let n = d.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { e[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { e[i].abs() } else { 0.0 };
        lo = lo.min(d[i] - left - right);
        hi = hi.max(d[i] + left + right);
    }
    (lo, hi)
}

/// Max-norm bound `max(|lo|, |hi|)` from the Gershgorin interval.
pub fn norm_bound(d: &[f64], e: &[f64]) -> f64 {
    let (lo, hi) = gershgorin(d, e);
    lo.abs().max(hi.abs())
}

/// Lowest `count` eigenvalues, ascending. `None` if bisection stalls, which
/// only happens for non-finite entries.
pub fn lowest_eigenvalues(d: &[f64], e: &[f64], count: usize) -> Option<Vec<f64>> {
    let n = d.len();
    let count = count.min(n);
    if d.iter().chain(e).any(|x| !x.is_finite()) {
        return None;
    }
    let (glo, ghi) = gershgorin(d, e);
    let norm = glo.abs().max(ghi.abs()).max(f64::MIN_POSITIVE);
    let guard = f64::EPSILON * f64::EPSILON * norm;
    let abs_tol = f64::EPSILON * norm;

    let mut out = Vec::with_capacity(count);
    // lower end for eigenvalue k never drops below eigenvalue k - 1
    let mut floor = glo - abs_tol;
    for k in 0..count {
        let mut lo = floor;
        let mut hi = ghi + abs_tol;
        let mut done = false;
        for _ in 0..MAX_BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= abs_tol.max(2.0 * f64::EPSILON * mid.abs()) || mid == lo || mid == hi {
                done = true;
                break;
            }
            if sturm_count(d, e, mid, guard) <= k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if !done {
            return None;
        }
        let value = 0.5 * (lo + hi);
        out.push(value);
        floor = lo;
    }
    Some(out)
}

/// LU factorisation with partial pivoting of a tridiagonal matrix
/// (sub `dl`, diag `dd`, super `du`), the layout LAPACK's `gttrf` uses.
struct TridiagLu {
    dl: Vec<f64>,
    dd: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    swapped: Vec<bool>,
}

impl TridiagLu {
    fn factor(mut dl: Vec<f64>, mut dd: Vec<f64>, mut du: Vec<f64>, tiny: f64) -> Self {
        let n = dd.len();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if dd[i].abs() >= dl[i].abs() {
                if dd[i] == 0.0 {
                    dd[i] = tiny;
                }
                let fact = dl[i] / dd[i];
                dl[i] = fact;
                dd[i + 1] -= fact * du[i];
            } else {
                swapped[i] = true;
                let fact = dd[i] / dl[i];
                dd[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = dd[i + 1];
                dd[i + 1] = temp - fact * dd[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -fact;
                }
            }
        }
        if n > 0 && dd[n - 1] == 0.0 {
            dd[n - 1] = tiny;
        }
        Self {
            dl,
            dd,
            du,
            du2,
            swapped,
        }
    }

    fn solve_in_place(&self, b: &mut [f64]) {
        let n = self.dd.len();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.dl[i] * b[i];
            } else {
                b[i + 1] -= self.dl[i] * b[i];
            }
        }
        for i in (0..n).rev() {
            let mut acc = b[i];
            if i + 1 < n {
                acc -= self.du[i] * b[i + 1];
            }
            if i + 2 < n {
                acc -= self.du2[i] * b[i + 2];
            }
            b[i] = acc / self.dd[i];
        }
    }
}

/// Unit eigenvector for the (already converged) eigenvalue `lambda`.
pub fn inverse_iteration(d: &[f64], e: &[f64], lambda: f64) -> Vec<f64> {
    let n = d.len();
    let norm = norm_bound(d, e).max(f64::MIN_POSITIVE);
    let tiny = f64::EPSILON * norm;
    let lu = TridiagLu::factor(
        e.to_vec(),
        d.iter().map(|&x| x - lambda).collect(),
        e.to_vec(),
        tiny,
    );
    // fixed, non-symmetric start vector so no eigenvector is orthogonal to it
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 0.5 * ((i * 7919) % 97) as f64 / 97.0).collect();
    for _ in 0..INVERSE_ITERATION_STEPS {
        lu.solve_in_place(&mut x);
        let s = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !(s.is_finite() && s > 0.0) {
            break;
        }
        x.iter_mut().for_each(|v| *v /= s);
    }
    x
}

/// `xᵀTx / xᵀx`.
pub fn rayleigh_quotient(d: &[f64], e: &[f64], x: &[f64]) -> f64 {
    let n = d.len();
    let mut num = 0.0;
    for i in 0..n {
        let mut tx = d[i] * x[i];
        if i > 0 {
            tx += e[i - 1] * x[i - 1];
        }
        if i + 1 < n {
            tx += e[i] * x[i + 1];
        }
        num += x[i] * tx;
    }
    num / x.iter().map(|v| v * v).sum::<f64>()
}
