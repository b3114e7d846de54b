//! Majorization of non-increasing vectors and the edge rotation that
//! steepens a degree sequence.

use serde::Serialize;

use crate::error::{Error, Result, RotationError};
use crate::graph::{DegreeSequence, Graph};

/// Slack for prefix-sum comparisons of real vectors, scaled by magnitude.
pub const REAL_SLACK: f64 = 1e-12;

/// A real vector kept in non-increasing order.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct RealVector(Vec<f64>);

impl RealVector {
    /// Sorts into non-increasing order; NaN and infinities are rejected.
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams("vector entries must be finite".into()));
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(RealVector(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The k-norm (Σ|x_i|^k)^{1/k}.
    pub fn norm(&self, k: f64) -> f64 {
        self.0.iter().map(|x| x.abs().powf(k)).sum::<f64>().powf(1.0 / k)
    }

    pub fn dot(&self, other: &RealVector) -> Result<f64> {
        same_len(self.len(), other.len())?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }
}

impl From<&DegreeSequence> for RealVector {
    fn from(d: &DegreeSequence) -> Self {
        RealVector(d.values().iter().map(|&v| v as f64).collect())
    }
}

fn same_len(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::Dimension { expected: a, got: b })
    }
}

fn slack(x: &RealVector, y: &RealVector) -> f64 {
    let scale = x.0.iter().chain(&y.0).fold(1.0f64, |m, v| m.max(v.abs()));
    REAL_SLACK * scale * x.len().max(1) as f64
}

/// x ≺_w y: every prefix sum of x is at most that of y.
pub fn weakly_majorizes(y: &RealVector, x: &RealVector) -> Result<bool> {
    same_len(y.len(), x.len())?;
    let eps = slack(x, y);
    let (mut sx, mut sy) = (0.0, 0.0);
    for (a, b) in x.0.iter().zip(&y.0) {
        sx += a;
        sy += b;
        if sx > sy + eps {
            return Ok(false);
        }
    }
    Ok(true)
}

/// x ≺ y: weak majorization with equal totals.
pub fn majorizes(y: &RealVector, x: &RealVector) -> Result<bool> {
    let total = |v: &RealVector| v.0.iter().sum::<f64>();
    Ok(weakly_majorizes(y, x)? && (total(x) - total(y)).abs() <= slack(x, y))
}

/// Exact x ≺ y for degree sequences.
pub fn degree_majorizes(y: &DegreeSequence, x: &DegreeSequence) -> Result<bool> {
    same_len(y.len(), x.len())?;
    let (mut sx, mut sy) = (0usize, 0usize);
    for (a, b) in x.values().iter().zip(y.values()) {
        sx += a;
        sy += b;
        if sx > sy {
            return Ok(false);
        }
    }
    Ok(sx == sy)
}

/// x ≺ y with x ≠ y, exactly.
pub fn strictly_majorizes(y: &DegreeSequence, x: &DegreeSequence) -> Result<bool> {
    Ok(degree_majorizes(y, x)? && x != y)
}

/// g − vw + uw, allowed when vw ∈ E, uw ∉ E, u ≠ w and d(u) ≥ d(v). The
/// degree sequence of the result strictly majorizes that of `g`.
pub fn rotate_edge(g: &Graph, v: usize, w: usize, u: usize) -> Result<Graph> {
    for x in [v, w, u] {
        if x >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: x, order: g.order() });
        }
    }
    if u == w {
        return Err(RotationError::SameVertex(u).into());
    }
    if !g.has_edge(v, w) {
        return Err(RotationError::MissingEdge { v, w }.into());
    }
    if g.has_edge(u, w) || u == v {
        return Err(RotationError::TargetPresent { u, w }.into());
    }
    let (du, dv) = (g.degree(u), g.degree(v));
    if du < dv {
        return Err(RotationError::DegreeOrder { du, dv }.into());
    }
    g.delete_edge(v, w)?.add_edge(u, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(v: &[f64]) -> RealVector {
        RealVector::new(v.to_vec()).unwrap()
    }

    fn ds(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec())
    }

    #[test]
    fn weak_examples() {
        assert!(weakly_majorizes(&rv(&[3.0, 2.0, 1.0]), &rv(&[3.0, 1.0, 1.0])).unwrap());
        assert!(weakly_majorizes(&rv(&[1.5, 0.5]), &rv(&[1.5, 0.5])).unwrap());
        assert!(!weakly_majorizes(&rv(&[3.0, 3.0]), &rv(&[4.0, 0.0])).unwrap());
        assert!(weakly_majorizes(&rv(&[1.0]), &rv(&[1.0, 0.0])).is_err());
    }

    #[test]
    fn strong_examples() {
        assert!(majorizes(&rv(&[3.0, 1.0]), &rv(&[2.0, 2.0])).unwrap());
        assert!(majorizes(&rv(&[2.0, 1.0, 1.0, 0.0]), &rv(&[1.0; 4])).unwrap());
        assert!(!majorizes(&rv(&[3.0, 2.0]), &rv(&[3.0, 1.0])).unwrap());
        assert!(degree_majorizes(&ds(&[2, 1, 1, 0]), &ds(&[1, 1, 1, 1])).unwrap());
        assert!(!degree_majorizes(&ds(&[3, 2]), &ds(&[3, 1])).unwrap());
        assert!(!strictly_majorizes(&ds(&[2, 2]), &ds(&[2, 2])).unwrap());
        assert!(RealVector::new(vec![f64::NAN]).is_err());
        assert_eq!(rv(&[1.0, 3.0, 2.0]).values(), &[3.0, 2.0, 1.0]);
    }

    #[test]
    fn rotation_two_edges() {
        // edges vw = 0-1 and uz = 2-3, rotate 0-1 onto 2-1
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let h = rotate_edge(&g, 0, 1, 2).unwrap();
        assert_eq!(h.degree_sequence().values(), &[2, 1, 1, 0]);
        assert!(strictly_majorizes(&h.degree_sequence(), &g.degree_sequence()).unwrap());
    }

    #[test]
    fn rotation_refusals() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert!(matches!(rotate_edge(&g, 0, 3, 4), Err(Error::Rotation(RotationError::MissingEdge { .. }))));
        assert!(matches!(rotate_edge(&g, 0, 1, 2), Err(Error::Rotation(RotationError::TargetPresent { .. }))));
        assert!(matches!(rotate_edge(&g, 0, 1, 1), Err(Error::Rotation(RotationError::SameVertex(1)))));
        assert!(matches!(rotate_edge(&g, 2, 3, 0), Err(Error::Rotation(RotationError::DegreeOrder { du: 1, dv: 3 }))));
        assert!(matches!(rotate_edge(&g, 0, 1, 9), Err(Error::VertexOutOfRange { .. })));
        assert!(rotate_edge(&g, 1, 0, 2).is_ok());
    }
}
