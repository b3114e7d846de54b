//! A_α = αD + (1−α)A: spectral radius, Perron vector, quotient matrices
//! and the polynomial bounds on ρ_α.

mod eigen;
mod poly;
mod quotient;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, VertexSet};

pub use poly::{largest_real_root, Polynomial};
pub use quotient::QuotientMatrix;
pub use verify::*;

/// The matrix parameter α, restricted to `[0, 1)`.
#[derive(Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct AlphaParam(f64);

impl AlphaParam {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && (0.0..1.0).contains(&value) {
            Ok(AlphaParam(value))
        } else {
            Err(Error::Alpha(value.to_string()))
        }
    }

    pub const fn value(self) -> f64 {
        self.0
    }

    /// α = 1/2, where A_α is half the signless Laplacian.
    pub const HALF: AlphaParam = AlphaParam(0.5);
    pub const ZERO: AlphaParam = AlphaParam(0.0);
}

impl FromStr for AlphaParam {
    type Err = Error;

    /// Plain decimal notation only: digits, one optional point, optional
    /// exponent. `inf`, `nan` and hex floats are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let ok = !s.is_empty()
            && s.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'))
            && s.chars().any(|c| c.is_ascii_digit());
        if !ok {
            return Err(Error::Alpha(s.to_string()));
        }
        let v: f64 = s.parse().map_err(|_| Error::Alpha(s.to_string()))?;
        AlphaParam::new(v).map_err(|_| Error::Alpha(s.to_string()))
    }
}

impl fmt::Debug for AlphaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α={}", self.0)
    }
}

impl fmt::Display for AlphaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralResult {
    pub rho: f64,
    pub perron: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl SpectralResult {
    /// Sum of Perron entries over `set`.
    pub fn mass(&self, set: VertexSet) -> f64 {
        set.iter().map(|v| self.perron[v]).sum()
    }
}

/// `y = A_α x` without materializing the matrix.
pub fn a_alpha_apply(g: &Graph, alpha: AlphaParam, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != g.order() {
        return Err(Error::Dimension { expected: g.order(), got: x.len() });
    }
    let mut y = vec![0.0; x.len()];
    apply_into(g, alpha.0, x, &mut y);
    Ok(y)
}

#[inline]
fn apply_into(g: &Graph, a: f64, x: &[f64], y: &mut [f64]) {
    let b = 1.0 - a;
    for (v, yv) in y.iter_mut().enumerate() {
        let row = g.neighbors(v);
        let s: f64 = Bits(row).map(|u| x[u]).sum();
        *yv = a * row.count_ones() as f64 * x[v] + b * s;
    }
}

fn dense_a_alpha(g: &Graph, a: f64) -> Vec<Vec<f64>> {
    let n = g.order();
    let mut m = vec![vec![0.0; n]; n];
    for (v, row) in m.iter_mut().enumerate() {
        row[v] = a * g.degree(v) as f64;
        for u in Bits(g.neighbors(v)) {
            row[u] = 1.0 - a;
        }
    }
    m
}

fn connected_radius(g: &Graph, a: f64) -> SpectralResult {
    let n = g.order();
    if n == 1 {
        return SpectralResult { rho: 0.0, perron: vec![1.0], residual: 0.0, iterations: 0, converged: true };
    }
    // λ_min(A_α) ≥ −(1−2α)Δ, so this shift makes the spectrum non-negative
    let shift = (1.0 - 2.0 * a).max(0.0) * g.max_degree() as f64 / 2.0 + 1e-3;
    let apply = |x: &[f64], y: &mut [f64]| apply_into(g, a, x, y);
    let dense = || dense_a_alpha(g, a);
    let p = eigen::top_pair(n, &apply, &dense, shift);
    SpectralResult { rho: p.rho, perron: p.vector, residual: p.residual, iterations: p.iterations, converged: p.converged }
}

/// ρ_α(g) with its Perron vector. Disconnected graphs are solved per
/// component; the Perron vector is supported on the first component
/// attaining the maximum.
pub fn spectral_radius(g: &Graph, alpha: AlphaParam) -> Result<SpectralResult> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let comps = g.components();
    if comps.len() == 1 {
        return Ok(connected_radius(g, alpha.0));
    }
    let mut best: Option<(SpectralResult, VertexSet)> = None;
    let mut iterations = 0;
    let mut converged = true;
    for c in comps {
        let r = connected_radius(&g.induced(c), alpha.0);
        iterations += r.iterations;
        converged &= r.converged;
        if best.as_ref().is_none_or(|(b, _)| r.rho > b.rho + 1e-12) {
            best = Some((r, c));
        }
    }
    let (r, c) = best.expect("non-empty graph has a component");
    let mut perron = vec![0.0; g.order()];
    for (i, v) in c.iter().enumerate() {
        perron[v] = r.perron[i];
    }
    Ok(SpectralResult { rho: r.rho, perron, residual: r.residual, iterations, converged })
}

/// ρ_α without the eigenvector bookkeeping.
pub fn rho(g: &Graph, alpha: AlphaParam) -> Result<f64> {
    Ok(spectral_radius(g, alpha)?.rho)
}

/// Signless Laplacian spectral radius, 2ρ_{1/2}.
pub fn q_index(g: &Graph) -> Result<f64> {
    Ok(2.0 * rho(g, AlphaParam::HALF)?)
}

/// Spectral radius of the quotient of `g` by the equitable partition `parts`.
pub fn quotient_spectral_radius(g: &Graph, parts: &[VertexSet], alpha: AlphaParam) -> Result<f64> {
    Ok(QuotientMatrix::from_partition(g, parts)?.spectral_radius(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{petersen, petersen_complement};

    fn al(v: f64) -> AlphaParam {
        AlphaParam::new(v).unwrap()
    }

    #[test]
    fn alpha_parsing() {
        assert_eq!("0.25".parse::<AlphaParam>().unwrap().value(), 0.25);
        assert_eq!("0".parse::<AlphaParam>().unwrap().value(), 0.0);
        assert_eq!("5e-1".parse::<AlphaParam>().unwrap().value(), 0.5);
        for bad in ["1", "1.0", "-0.1", "nan", "inf", "", "0x1", ".", "0.5.5", "2"] {
            assert!(bad.parse::<AlphaParam>().is_err(), "{bad}");
        }
    }

    #[test]
    fn apply_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(a_alpha_apply(&k3, al(0.5), &[1.0; 3]).unwrap(), vec![2.0; 3]);
        let star = Graph::complete_bipartite(1, 3).unwrap();
        assert_eq!(a_alpha_apply(&star, al(0.0), &[1.0, 0.0, 0.0, 0.0]).unwrap(), vec![0.0, 1.0, 1.0, 1.0]);
        assert_eq!(a_alpha_apply(&star, al(0.7), &[0.0; 4]).unwrap(), vec![0.0; 4]);
        assert!(matches!(a_alpha_apply(&star, al(0.7), &[0.0; 3]), Err(Error::Dimension { expected: 4, got: 3 })));
    }

    #[test]
    fn regular_graphs() {
        for a in [0.0, 0.3, 0.5, 0.9] {
            let r = spectral_radius(&Graph::complete(7).unwrap(), al(a)).unwrap();
            assert!((r.rho - 6.0).abs() < 1e-10);
            assert!(r.converged);
            assert!((rho(&petersen_complement(), al(a)).unwrap() - 6.0).abs() < 1e-10);
            assert!((rho(&petersen(), al(a)).unwrap() - 3.0).abs() < 1e-10);
        }
        assert!((q_index(&Graph::cycle(5).unwrap()).unwrap() - 4.0).abs() < 1e-10);
        assert!((q_index(&Graph::complete(6).unwrap()).unwrap() - 10.0).abs() < 1e-10);
    }

    #[test]
    fn bipartite_adjacency() {
        // ρ_0(K_{m,n}) = √(mn), an oscillation trap for plain power iteration
        let g = Graph::complete_bipartite(3, 5).unwrap();
        let r = spectral_radius(&g, al(0.0)).unwrap();
        assert!((r.rho - 15f64.sqrt()).abs() < 1e-10);
        assert!(r.residual < 1e-11);
        assert!(r.perron.iter().all(|&x| x > 0.0));
        let norm: f64 = r.perron.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn disconnected_graphs() {
        let g = Graph::complete(3).unwrap().union(&Graph::complete(5).unwrap()).unwrap();
        let r = spectral_radius(&g, al(0.4)).unwrap();
        assert!((r.rho - 4.0).abs() < 1e-10);
        assert!(r.perron[..3].iter().all(|&x| x == 0.0));
        let e = Graph::empty(4).unwrap();
        assert_eq!(rho(&e, al(0.4)).unwrap(), 0.0);
        assert!(matches!(spectral_radius(&Graph::empty(0).unwrap(), al(0.1)), Err(Error::EmptyGraph)));
    }

    #[test]
    fn star_radius() {
        // ρ_α(K_{1,k}) is the larger root of x² − α(k+1)x + (2α−1)k
        for a in [0.0f64, 0.2, 0.5, 0.8] {
            let k: f64 = 6.0;
            let b = a * (k + 1.0);
            let c = (2.0 * a - 1.0) * k;
            let want = (b + (b * b - 4.0 * c).sqrt()) / 2.0;
            let got = rho(&Graph::complete_bipartite(1, 6).unwrap(), al(a)).unwrap();
            assert!((got - want).abs() < 1e-10, "{a}: {got} vs {want}");
        }
    }
}
