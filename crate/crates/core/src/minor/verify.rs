//! Exhaustive and reduction-based checks of the minor lemmas.

use rayon::prelude::*;
use serde::Serialize;

use super::{clique_dominating_set, has_kab_minor, has_minor, has_st_property, GENERIC_HOST_LIMIT};
use crate::constructions::StParams;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6;

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma210Report {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub clique: VertexSet,
    /// Decided on `g` itself by the generic branch-set search.
    pub minor_free: bool,
    /// Decided on `g − K` by the contraction engine.
    pub remainder_has_property: bool,
}

impl Lemma210Report {
    pub fn passed(&self) -> bool {
        self.minor_free == self.remainder_has_property
    }
}

/// Computes both sides of the clique-dominating-set reduction.
pub fn verify_lemma210(g: &Graph, s: usize, t: usize) -> Result<Lemma210Report> {
    let params = StParams::new(s, t)?;
    if g.order() > GENERIC_HOST_LIMIT {
        return Err(Error::TooLarge(format!("direct side limited to {GENERIC_HOST_LIMIT} vertices, got {}", g.order())));
    }
    let clique = clique_dominating_set(g, s - 1)
        .ok_or_else(|| Error::Precondition(format!("no clique dominating set of size {}", s - 1)))?;
    let minor_free = has_minor(g, &Graph::complete_bipartite(s, t)?)?.is_none();
    let rest = g.induced(g.vertices().difference(clique));
    let remainder_has_property = has_st_property(&rest, params);
    Ok(Lemma210Report { n: g.order(), s, t, clique, minor_free, remainder_has_property })
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma211Report {
    pub s: usize,
    pub t: usize,
    pub gamma: usize,
    pub labeled_graphs: u64,
    pub connected: u64,
    pub with_property: u64,
    /// graph6 strings of connected graphs where the two sides disagree.
    pub counterexamples: Vec<String>,
}

impl Lemma211Report {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn min_component(g: &Graph) -> usize {
    g.components().iter().map(|c| c.len()).min().unwrap_or(0)
}

/// For all connected labeled graphs on t+1 vertices: the property holds iff
/// every component of the complement has more than γ vertices.
pub fn verify_lemma211(t: usize, s: usize) -> Result<Lemma211Report> {
    if !(4..=5).contains(&t) {
        return Err(Error::TooLarge(format!("exhaustive mode covers t in 4..=5, got {t}")));
    }
    let params = StParams::new(s, t)?;
    let n = t + 1;
    let gamma = params.gamma();
    let total = 1u64 << binom2(n);
    let (connected, with_property, mut counterexamples) = (0..total)
        .into_par_iter()
        .fold(
            || (0u64, 0u64, Vec::new()),
            |(c, p, mut bad), mask| {
                let g = Graph::from_triangle_mask(n, mask);
                if !g.is_connected() {
                    return (c, p, bad);
                }
                let prop = has_st_property(&g, params);
                if prop != (min_component(&g.complement()) > gamma) {
                    bad.push(mask);
                }
                (c + 1, p + prop as u64, bad)
            },
        )
        .reduce(|| (0, 0, Vec::new()), |a, b| (a.0 + b.0, a.1 + b.1, [a.2, b.2].concat()));
    counterexamples.sort_unstable();
    Ok(Lemma211Report {
        s,
        t,
        gamma,
        labeled_graphs: total,
        connected,
        with_property,
        counterexamples: counterexamples.iter().map(|&m| graph6::encode(&Graph::from_triangle_mask(n, m))).collect(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma24Row {
    pub n: usize,
    pub bound: usize,
    pub connected: u64,
    pub minor_free: u64,
    pub max_edges: usize,
    pub violations: Vec<String>,
    /// Smallest-mask connected minor-free graph meeting the bound.
    pub equality_witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma24Report {
    pub t: usize,
    pub rows: Vec<Lemma24Row>,
}

impl Lemma24Report {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.violations.is_empty() && r.equality_witness.is_some())
    }
}

/// Largest order accepted by [`verify_lemma24`].
pub const LEMMA24_MAX_ORDER: usize = 8;

/// Edge bound for connected K_{1,t}-minor-free graphs, over every labeled
/// graph of order t+2..=n_max.
pub fn verify_lemma24(t: usize, n_max: usize) -> Result<Lemma24Report> {
    if t < 3 {
        return Err(Error::InvalidParams(format!("t must be at least 3, got {t}")));
    }
    if n_max > LEMMA24_MAX_ORDER || n_max < t + 2 {
        return Err(Error::TooLarge(format!("orders {}..={n_max} are outside 1..={LEMMA24_MAX_ORDER}", t + 2)));
    }
    let rows = (t + 2..=n_max).map(|n| star_bound_row(t, n)).collect();
    Ok(Lemma24Report { t, rows })
}

fn star_bound_row(t: usize, n: usize) -> Lemma24Row {
    let bound = binom2(t) + n - t;
    let total = 1u64 << binom2(n);
    #[derive(Default)]
    struct Acc {
        connected: u64,
        free: u64,
        max_edges: usize,
        violations: Vec<u64>,
        witness: Option<u64>,
    }
    let merge = |mut a: Acc, b: Acc| {
        a.connected += b.connected;
        a.free += b.free;
        a.max_edges = a.max_edges.max(b.max_edges);
        a.violations.extend(b.violations);
        a.witness = match (a.witness, b.witness) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
        a
    };
    let acc = (0..total)
        .into_par_iter()
        .fold(Acc::default, |mut acc, mask| {
            let g = Graph::from_triangle_mask(n, mask);
            if g.max_degree() >= t || !g.is_connected() {
                acc.connected += g.is_connected() as u64;
                return acc;
            }
            acc.connected += 1;
            if has_kab_minor(&g, 1, t) {
                return acc;
            }
            let e = g.edge_count();
            acc.free += 1;
            acc.max_edges = acc.max_edges.max(e);
            if e > bound {
                acc.violations.push(mask);
            }
            if e == bound && acc.witness.is_none_or(|w| mask < w) {
                acc.witness = Some(mask);
            }
            acc
        })
        .reduce(Acc::default, merge);
    let mut violations = acc.violations;
    violations.sort_unstable();
    let enc = |m: u64| graph6::encode(&Graph::from_triangle_mask(n, m));
    Lemma24Row {
        n,
        bound,
        connected: acc.connected,
        minor_free: acc.free,
        max_edges: acc.max_edges,
        violations: violations.into_iter().map(enc).collect(),
        equality_witness: acc.witness.map(enc),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::extremal_gstar;

    #[test]
    fn reduction_examples() {
        let p = StParams::new(2, 3).unwrap();
        let r = verify_lemma210(&extremal_gstar(12, p).unwrap(), 2, 3).unwrap();
        assert!(r.minor_free && r.remainder_has_property && r.passed());
        for s in 2..=3 {
            let g = Graph::complete(s - 1).unwrap().join(&Graph::complete(5).unwrap()).unwrap();
            let r = verify_lemma210(&g, s, 4).unwrap();
            assert!(!r.minor_free && !r.remainder_has_property);
        }
        assert!(matches!(verify_lemma210(&Graph::cycle(6).unwrap(), 2, 3), Err(Error::Precondition(_))));
        assert!(matches!(verify_lemma210(&Graph::complete(15).unwrap(), 2, 3), Err(Error::TooLarge(_))));
    }

    #[test]
    fn complement_components_small() {
        let r = verify_lemma211(4, 2).unwrap();
        assert_eq!(r.labeled_graphs, 1024);
        assert_eq!(r.connected, 728);
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert!(verify_lemma211(6, 2).is_err());
    }

    #[test]
    fn star_bound_small() {
        let r = verify_lemma24(3, 5).unwrap();
        assert!(r.passed());
        let row = &r.rows[0];
        assert_eq!(row.connected, 728);
        assert_eq!(row.max_edges, 5);
        assert!(verify_lemma24(2, 5).is_err());
        assert!(verify_lemma24(3, 9).is_err());
    }
}
