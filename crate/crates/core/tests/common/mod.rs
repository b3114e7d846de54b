#![allow(dead_code)]

use kst_core::majorization::RealVector;
use kst_core::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Dense αD + (1−α)A as a row-major matrix.
pub fn dense_matrix(g: &Graph, alpha: f64) -> Vec<Vec<f64>> {
    let n = g.order();
    let mut m = vec![vec![0.0; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = 1.0 - alpha;
        m[v][u] = 1.0 - alpha;
    }
    for (v, row) in m.iter_mut().enumerate() {
        row[v] = alpha * g.degree(v) as f64;
    }
    m
}

/// Largest eigenvalue of a symmetric matrix by power iteration on M + cI,
/// with c the largest absolute row sum so every shifted eigenvalue is
/// non-negative. Stops on the Rayleigh quotient.
pub fn dense_top_eigenvalue(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let c = m.iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
    // a slightly uneven start avoids being orthogonal to the top vector
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 0.01 * i as f64).collect();
    let mut last = f64::NAN;
    let mut stable = 0;
    for _ in 0..200_000 {
        let y: Vec<f64> = (0..n).map(|i| c * x[i] + (0..n).map(|j| m[i][j] * x[j]).sum::<f64>()).collect();
        let num: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        let ray = num / den - c;
        let norm = y.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        x = y.iter().map(|a| a / norm).collect();
        if (ray - last).abs() < 1e-15 * (1.0 + ray.abs()) {
            stable += 1;
            if stable > 20 {
                return ray;
            }
        } else {
            stable = 0;
        }
        last = ray;
    }
    last
}

pub fn dense_rho(g: &Graph, alpha: f64) -> f64 {
    dense_top_eigenvalue(&dense_matrix(g, alpha))
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A random spanning tree plus extra edges with probability `p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = random_graph(rng, n, p);
    for v in 1..n {
        let u = rng.random_range(0..v);
        if !g.has_edge(u, v) {
            g = g.add_edge(u, v).unwrap();
        }
    }
    g
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Moves `d` from entry i to a later entry j while keeping the order.
fn transfer(x: &mut [f64], rng: &mut ChaCha8Rng) -> bool {
    let n = x.len();
    let i = rng.random_range(0..n - 1);
    let j = rng.random_range(i + 1..n);
    let room = (x[i] - x[j]) / 2.0;
    if room < 0.02 {
        return false;
    }
    let d = rng.random_range(0.01..room);
    x[i] -= d;
    x[j] += d;
    true
}

/// A pair x ≺ y (or x ≺_w y when `weak`) with x ≠ y.
pub fn majorized_pair(rng: &mut ChaCha8Rng, weak: bool) -> (RealVector, RealVector) {
    loop {
        let n = rng.random_range(2..=8);
        let y = sorted_desc((0..n).map(|_| rng.random_range(0.0..10.0)).collect());
        let mut x = y.clone();
        let mut changed = false;
        for _ in 0..rng.random_range(1..=4) {
            if weak && rng.random_bool(0.5) {
                let i = rng.random_range(0..n);
                let d = rng.random_range(0.0..=x[i]);
                if d > 0.01 {
                    x[i] -= d;
                    changed = true;
                }
            } else {
                changed |= transfer(&mut x, rng);
            }
            x = sorted_desc(x);
        }
        if changed {
            return (RealVector::new(x).unwrap(), RealVector::new(y).unwrap());
        }
    }
}

pub fn legal_rotations(g: &Graph) -> Vec<(usize, usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for v in 0..n {
        for w in 0..n {
            if !g.has_edge(v, w) {
                continue;
            }
            for u in 0..n {
                if u != w && u != v && !g.has_edge(u, w) && g.degree(u) >= g.degree(v) {
                    out.push((v, w, u));
                }
            }
        }
    }
    out
}
