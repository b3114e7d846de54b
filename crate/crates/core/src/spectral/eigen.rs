//! Top eigenpair of a small symmetric non-negative operator.
//!
//! Shifted power iteration supplies a positive starting vector; Rayleigh
//! quotient iteration with a dense LU solve then polishes it. A polished
//! pair is accepted only if it is non-negative and does not lower the
//! Rayleigh quotient, which pins it to the Perron root.

pub(crate) const RESIDUAL_TOL: f64 = 1e-11;
pub(crate) const MAX_ITERATIONS: usize = 200_000;
const STAGNATION_WINDOW: usize = 10;
const STAGNATION_TOL: f64 = 1e-13;

pub(crate) struct TopPair {
    pub rho: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn normalize(x: &mut [f64]) {
    let s = norm(x);
    if s > 0.0 {
        x.iter_mut().for_each(|v| *v /= s);
    }
}

/// Rayleigh quotient and residual norm of a unit vector.
fn rayleigh(apply: &dyn Fn(&[f64], &mut [f64]), x: &[f64], y: &mut [f64]) -> (f64, f64) {
    apply(x, y);
    let rho = dot(x, y);
    let res = x.iter().zip(y.iter()).map(|(a, b)| (b - rho * a).powi(2)).sum::<f64>().sqrt();
    (rho, res)
}

/// Solves `(m − σI) z = b` by Gaussian elimination with partial pivoting.
fn shifted_solve(m: &[Vec<f64>], sigma: f64, b: &[f64]) -> Option<Vec<f64>> {
    let n = b.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    for (i, row) in a.iter_mut().enumerate() {
        row[i] -= sigma;
    }
    let mut z = b.to_vec();
    let scale = m.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs())).max(1.0);
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            a[piv][col] = 1e-18 * scale;
        }
        a.swap(col, piv);
        z.swap(col, piv);
        for i in col + 1..n {
            let f = a[i][col] / a[col][col];
            if f != 0.0 {
                for k in col..n {
                    a[i][k] -= f * a[col][k];
                }
                z[i] -= f * z[col];
            }
        }
    }
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| a[i][k] * z[k]).sum();
        z[i] = (z[i] - s) / a[i][i];
    }
    z.iter().all(|v| v.is_finite()).then_some(z)
}

/// Attempts to polish `(rho, x)` by Rayleigh quotient iteration.
fn polish(
    apply: &dyn Fn(&[f64], &mut [f64]),
    dense: &[Vec<f64>],
    x: &[f64],
    rho: f64,
) -> Option<(f64, Vec<f64>, f64, usize)> {
    let n = x.len();
    let mut cur = x.to_vec();
    let mut sigma = rho;
    let mut y = vec![0.0; n];
    for step in 1..=8 {
        let mut z = shifted_solve(dense, sigma, &cur)?;
        if z.iter().sum::<f64>() < 0.0 {
            z.iter_mut().for_each(|v| *v = -*v);
        }
        normalize(&mut z);
        let (r, res) = rayleigh(apply, &z, &mut y);
        cur = z;
        sigma = r;
        if res < RESIDUAL_TOL {
            if r < rho - 1e-9 || cur.iter().any(|&v| v < -1e-9) {
                return None;
            }
            cur.iter_mut().for_each(|v| *v = v.max(0.0));
            normalize(&mut cur);
            let (r, res) = rayleigh(apply, &cur, &mut y);
            return Some((r, cur, res, step));
        }
    }
    None
}

/// `apply` computes `y = M x`; `dense` materializes `M` for the polish
/// step; `shift` makes every eigenvalue of `M + shift·I` non-negative.
pub(crate) fn top_pair(
    n: usize,
    apply: &dyn Fn(&[f64], &mut [f64]),
    dense: &dyn Fn() -> Vec<Vec<f64>>,
    shift: f64,
) -> TopPair {
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut history: Vec<f64> = Vec::new();
    let mut matrix: Option<Vec<Vec<f64>>> = None;
    let mut best = (f64::NEG_INFINITY, x.clone(), f64::INFINITY);
    let mut next_polish = 16;
    for it in 1..=MAX_ITERATIONS {
        let (rho, res) = rayleigh(apply, &x, &mut y);
        best = (rho, x.clone(), res);
        if res < RESIDUAL_TOL {
            return TopPair { rho, vector: x, residual: res, iterations: it, converged: true };
        }
        history.push(rho);
        if history.len() > STAGNATION_WINDOW {
            let old = history[history.len() - 1 - STAGNATION_WINDOW];
            if (rho - old).abs() <= STAGNATION_TOL * rho.abs().max(1.0) && res < 1e-8 {
                return TopPair { rho, vector: x, residual: res, iterations: it, converged: true };
            }
        }
        if it == next_polish {
            next_polish *= 2;
            let m = matrix.get_or_insert_with(dense);
            if let Some((r, v, pres, steps)) = polish(apply, m, &x, rho) {
                return TopPair { rho: r, vector: v, residual: pres, iterations: it + steps, converged: pres < RESIDUAL_TOL };
            }
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi + shift * *xi;
        }
        normalize(&mut x);
        if x.iter().all(|&v| v == 0.0) {
            break;
        }
    }
    TopPair { rho: best.0, vector: best.1, residual: best.2, iterations: MAX_ITERATIONS, converged: false }
}
