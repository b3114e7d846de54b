use serde::Serialize;

use super::eigen;
use super::AlphaParam;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Quotient of an equitable partition: `b[i][j]` is the number of
/// neighbours in part `j` of any vertex in part `i`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientMatrix {
    pub b: Vec<Vec<usize>>,
    pub part_sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// Reads the quotient off `g`, checking that `parts` is a partition of
    /// the vertex set and that it is equitable.
    pub fn from_partition(g: &Graph, parts: &[VertexSet]) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for p in parts {
            if p.is_empty() {
                return Err(Error::NotEquitable("empty part".into()));
            }
            if !p.is_disjoint(seen) {
                return Err(Error::NotEquitable("parts overlap".into()));
            }
            seen = seen.union(*p);
        }
        if seen != g.vertices() {
            return Err(Error::NotEquitable("parts do not cover the vertex set".into()));
        }
        let k = parts.len();
        let mut b = vec![vec![0; k]; k];
        for (i, pi) in parts.iter().enumerate() {
            let rep = pi.first().expect("non-empty part");
            for (j, pj) in parts.iter().enumerate() {
                let want = (g.neighbors(rep) & pj.mask()).count_ones() as usize;
                for v in pi.iter() {
                    let got = (g.neighbors(v) & pj.mask()).count_ones() as usize;
                    if got != want {
                        return Err(Error::NotEquitable(format!(
                            "vertices {rep} and {v} of part {i} see {want} and {got} neighbours in part {j}"
                        )));
                    }
                }
                b[i][j] = want;
            }
        }
        Ok(QuotientMatrix { b, part_sizes: parts.iter().map(|p| p.len()).collect() })
    }

    /// Builds the quotient from counts alone, so the underlying graph may
    /// exceed 64 vertices. Checks the double-counting identity
    /// `size_i·b_ij = size_j·b_ji` and that `b_ii < size_i`.
    pub fn from_counts(b: Vec<Vec<usize>>, part_sizes: Vec<usize>) -> Result<Self> {
        let k = part_sizes.len();
        if b.len() != k || b.iter().any(|row| row.len() != k) {
            return Err(Error::Dimension { expected: k, got: b.len() });
        }
        for i in 0..k {
            if part_sizes[i] == 0 {
                return Err(Error::NotEquitable(format!("part {i} is empty")));
            }
            if b[i][i] >= part_sizes[i] {
                return Err(Error::NotEquitable(format!("part {i} of size {} cannot give {} inner neighbours", part_sizes[i], b[i][i])));
            }
            for j in 0..k {
                if b[i][j] > part_sizes[j] || part_sizes[i] * b[i][j] != part_sizes[j] * b[j][i] {
                    return Err(Error::NotEquitable(format!("counts between parts {i} and {j} are inconsistent")));
                }
            }
        }
        Ok(QuotientMatrix { b, part_sizes })
    }

    pub fn parts(&self) -> usize {
        self.part_sizes.len()
    }

    /// Q = α·diag(row sums) + (1−α)·b.
    pub fn matrix(&self, alpha: AlphaParam) -> Vec<Vec<f64>> {
        let a = alpha.value();
        let k = self.parts();
        let mut q = vec![vec![0.0; k]; k];
        for i in 0..k {
            let deg: usize = self.b[i].iter().sum();
            for j in 0..k {
                q[i][j] = (1.0 - a) * self.b[i][j] as f64;
            }
            q[i][i] += a * deg as f64;
        }
        q
    }

    /// Q conjugated by diag(√size), which is symmetric with the same
    /// spectrum.
    pub fn symmetric_matrix(&self, alpha: AlphaParam) -> Vec<Vec<f64>> {
        let q = self.matrix(alpha);
        let k = self.parts();
        let mut s = vec![vec![0.0; k]; k];
        for i in 0..k {
            for j in 0..k {
                let w = (self.part_sizes[i] as f64 / self.part_sizes[j] as f64).sqrt();
                s[i][j] = q[i][j] * w;
            }
        }
        for i in 0..k {
            for j in 0..i {
                let m = 0.5 * (s[i][j] + s[j][i]);
                s[i][j] = m;
                s[j][i] = m;
            }
        }
        s
    }

    /// Largest eigenvalue of Q.
    pub fn spectral_radius(&self, alpha: AlphaParam) -> f64 {
        let s = self.symmetric_matrix(alpha);
        let k = s.len();
        let shift = s.iter().map(|row| row.iter().map(|v| v.abs()).sum::<f64>()).fold(0.0, f64::max) * 0.5;
        let apply = |x: &[f64], y: &mut [f64]| {
            for (i, yi) in y.iter_mut().enumerate() {
                *yi = s[i].iter().zip(x).map(|(a, b)| a * b).sum();
            }
        };
        let dense = || s.clone();
        eigen::top_pair(k, &apply, &dense, shift).rho
    }
}
