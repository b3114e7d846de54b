//! Exhaustive checks of the edge-maximality lemmas on t+1 and t+2
//! vertices, and of local optimality of G* components.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::{binom2, property_table, MaskTable};
use crate::constructions::{h_abc, StParams};
use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph, VertexSet};
use crate::graph6;
use crate::iso::canonical_mask;
use crate::majorization::strictly_majorizes;

fn check_small_t(t: usize) -> Result<()> {
    if (4..=5).contains(&t) {
        Ok(())
    } else {
        Err(Error::TooLarge(format!("exhaustive mode covers t in 4..=5, got {t}")))
    }
}

fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.order()
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma212Report {
    pub s: usize,
    pub t: usize,
    pub beta: usize,
    pub expected_edges: usize,
    pub connected_with_property: u64,
    /// Most edges among connected graphs with the property.
    pub max_edges: usize,
    /// Labeled graphs attaining `max_edges`.
    pub maximum_graphs: u64,
    /// Graphs where no single added edge keeps the property.
    pub locally_maximal: u64,
    /// Locally maximal graphs with fewer than `expected_edges` edges.
    pub locally_maximal_below: u64,
    /// Maximum graphs whose complement is not a forest with β components.
    pub counterexamples: Vec<String>,
}

impl Lemma212Report {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.max_edges == self.expected_edges
    }
}

/// Among connected graphs on t+1 vertices with the property, those with the
/// most edges have C(t,2)+β−1 edges and a complement that is a forest with
/// β components. Graphs that are only maximal under single-edge additions
/// are counted separately, since they can have fewer edges.
pub fn verify_lemma212(t: usize, s: usize) -> Result<Lemma212Report> {
    check_small_t(t)?;
    let params = StParams::new(s, t)?;
    let beta = params.beta();
    let expected_edges = binom2(t) + beta - 1;
    let table = property_table(t + 1, params)?;
    let connected: Vec<u64> = table.masks().filter(|&m| Graph::from_triangle_mask(t + 1, m).is_connected()).collect();
    let max_edges = connected.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
    let (mut maximum, mut local, mut below, mut bad) = (0, 0, 0, Vec::new());
    for &m in &connected {
        let e = m.count_ones() as usize;
        if table.is_edge_maximal(m) {
            local += 1;
            below += (e < expected_edges) as u64;
        }
        if e != max_edges {
            continue;
        }
        maximum += 1;
        let g = Graph::from_triangle_mask(t + 1, m);
        let c = g.complement();
        if e != expected_edges || !is_forest(&c) || c.components().len() != beta {
            bad.push(graph6::encode(&g));
        }
    }
    Ok(Lemma212Report {
        s,
        t,
        beta,
        expected_edges,
        connected_with_property: connected.len() as u64,
        max_edges,
        maximum_graphs: maximum,
        locally_maximal: local,
        locally_maximal_below: below,
        counterexamples: bad,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma215Report {
    pub s: usize,
    pub t: usize,
    pub bound: usize,
    pub connected_with_property: u64,
    pub max_edges: usize,
    /// Labeled graphs meeting the bound.
    pub equality_graphs: u64,
    pub equality_classes: usize,
    pub over_bound: Vec<String>,
    /// Equality graphs whose complement is no H_{a,b,c}.
    pub unmatched: Vec<String>,
}

impl Lemma215Report {
    pub fn passed(&self) -> bool {
        self.over_bound.is_empty() && self.unmatched.is_empty()
    }
}

/// Canonical keys of every H_{a,b,c} with a + b + c = t − 1.
fn habc_keys(t: usize) -> Result<HashSet<u64>> {
    let mut keys = HashSet::new();
    for b in 1..t - 1 {
        for c in 1..t - b {
            let a = t - 1 - b - c;
            keys.insert(canonical_mask(&h_abc(a, b, c)?));
        }
    }
    Ok(keys)
}

/// Connected graphs on t+2 vertices with the property have at most
/// C(t,2)+2 edges, and at equality the complement is some H_{a,b,c}.
pub fn verify_lemma215(t: usize, s: usize) -> Result<Lemma215Report> {
    check_small_t(t)?;
    let params = StParams::new(s, t)?;
    if params.beta() > 2 {
        return Err(Error::Hypothesis(format!("needs beta <= 2, got {}", params.beta())));
    }
    let n = t + 2;
    let bound = binom2(t) + 2;
    let table = property_table(n, params)?;
    let keys = habc_keys(t)?;
    let (mut connected, mut max_edges, mut equality) = (0, 0, 0);
    let mut classes = HashSet::new();
    let (mut over, mut unmatched) = (Vec::new(), Vec::new());
    for m in table.masks() {
        let g = Graph::from_triangle_mask(n, m);
        if !g.is_connected() {
            continue;
        }
        connected += 1;
        let e = g.edge_count();
        max_edges = max_edges.max(e);
        if e > bound {
            over.push(graph6::encode(&g));
        } else if e == bound {
            equality += 1;
            let key = canonical_mask(&g.complement());
            if classes.insert(key) && !keys.contains(&key) {
                unmatched.push(graph6::encode(&g));
            }
        }
    }
    Ok(Lemma215Report {
        s,
        t,
        bound,
        connected_with_property: connected,
        max_edges,
        equality_graphs: equality,
        equality_classes: classes.len(),
        over_bound: over,
        unmatched,
    })
}

// ---- local optimality of G* components -------------------------------

/// Largest part accepted by the local checks.
pub const MAX_PART: usize = 7;

/// One component, or a union of two, of G* − K.
#[derive(Clone, Debug, Serialize)]
pub struct PartCheck {
    pub vertices: VertexSet,
    pub order: usize,
    pub edges: usize,
    /// Most edges of any graph with the property on the same vertex count.
    pub best_alternative: usize,
    /// Property graphs with the same edge count.
    pub same_edge_alternatives: u64,
    /// Distinct degree sequences among those that strictly majorize ours.
    pub strict_majorizers: Vec<DegreeSequence>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalReport {
    pub s: usize,
    pub t: usize,
    pub max_part: usize,
    pub parts: Vec<PartCheck>,
}

impl LocalReport {
    /// No alternative has more edges.
    pub fn edges_ok(&self) -> bool {
        self.parts.iter().all(|p| p.edges >= p.best_alternative)
    }

    /// No same-size alternative strictly majorizes.
    pub fn majorization_ok(&self) -> bool {
        self.parts.iter().all(|p| p.strict_majorizers.is_empty())
    }
}

struct SizeSummary {
    max_edges: usize,
    /// Edge count → (graph count, distinct degree sequences).
    by_edges: HashMap<usize, (u64, HashSet<DegreeSequence>)>,
}

fn summarize(table: &MaskTable) -> SizeSummary {
    let mut s = SizeSummary { max_edges: 0, by_edges: HashMap::new() };
    for m in table.masks() {
        let g = Graph::from_triangle_mask(table.order(), m);
        let e = g.edge_count();
        s.max_edges = s.max_edges.max(e);
        let slot = s.by_edges.entry(e).or_default();
        slot.0 += 1;
        slot.1.insert(g.degree_sequence());
    }
    s
}

fn local_checks(gstar: &Graph, k: VertexSet, s: usize, t: usize, max_part: usize) -> Result<LocalReport> {
    let params = StParams::new(s, t)?;
    if max_part > MAX_PART {
        return Err(Error::TooLarge(format!("parts are limited to {MAX_PART} vertices, got {max_part}")));
    }
    let n = gstar.order();
    if k.iter().any(|v| v >= n || gstar.degree(v) + 1 != n) {
        return Err(Error::Precondition("K is not a clique dominating set".into()));
    }
    let rest = gstar.vertices().difference(k);
    let comps: Vec<VertexSet> =
        gstar.components_within(rest.mask()).into_iter().filter(|c| c.len() <= max_part).collect();
    let mut parts: Vec<VertexSet> = comps.clone();
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            if comps[i].len() + comps[j].len() <= max_part {
                parts.push(comps[i].union(comps[j]));
            }
        }
    }
    let mut summaries: HashMap<usize, SizeSummary> = HashMap::new();
    let mut out = Vec::with_capacity(parts.len());
    for part in parts {
        let order = part.len();
        if let Entry::Vacant(e) = summaries.entry(order) {
            e.insert(summarize(&property_table(order, params)?));
        }
        let summary = &summaries[&order];
        let h = gstar.induced(part);
        let edges = h.edge_count();
        let pi = h.degree_sequence();
        let (count, seqs) = summary.by_edges.get(&edges).map(|(c, s)| (*c, Some(s))).unwrap_or((0, None));
        let mut strict = Vec::new();
        for d in seqs.into_iter().flatten() {
            if strictly_majorizes(d, &pi)? {
                strict.push(d.clone());
            }
        }
        strict.sort();
        out.push(PartCheck {
            vertices: part,
            order,
            edges,
            best_alternative: summary.max_edges,
            same_edge_alternatives: count,
            strict_majorizers: strict,
        });
    }
    Ok(LocalReport { s, t, max_part, parts: out })
}

/// For components of G* − K with at most `max_part` vertices, and unions of
/// two of them, no graph with the property on the same vertices has more
/// edges.
pub fn verify_local_edge_maximality(gstar: &Graph, k: VertexSet, s: usize, t: usize, max_part: usize) -> Result<LocalReport> {
    local_checks(gstar, k, s, t, max_part)
}

/// Same parts; no property graph with equal edge count has a degree
/// sequence strictly majorizing the part's.
pub fn verify_degree_majorization_maximality(
    gstar: &Graph,
    k: VertexSet,
    s: usize,
    t: usize,
    max_part: usize,
) -> Result<LocalReport> {
    local_checks(gstar, k, s, t, max_part)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extremal_gstar, h_st_complement};
    use crate::minor::has_st_property;

    #[test]
    fn edge_maximal_small() {
        let r = verify_lemma212(4, 2).unwrap();
        assert_eq!(r.expected_edges, 6);
        assert!(r.passed(), "{:?}", r.counterexamples);
        // complement K_{1,5} is locally maximal with 10 < 11 edges
        let r = verify_lemma212(5, 2).unwrap();
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert!(r.locally_maximal_below > 0);
        let p = StParams::new(2, 5).unwrap();
        let h = h_st_complement(p).unwrap();
        assert_eq!(h.edge_count(), 11);
        for (u, v) in h.non_edges() {
            assert!(!has_st_property(&h.add_edge(u, v).unwrap(), p));
        }
    }

    #[test]
    fn two_extra_vertices_small() {
        // the bound is not attained at t = 4
        let r = verify_lemma215(4, 2).unwrap();
        assert_eq!(r.bound, 8);
        assert!(r.passed(), "{r:?}");
        assert_eq!((r.max_edges, r.equality_graphs), (7, 0));
        assert!(verify_lemma215(5, 3).is_ok());
        assert!(verify_lemma215(3, 2).is_err());
    }

    #[test]
    fn local_examples() {
        let p = StParams::new(2, 3).unwrap();
        let g = extremal_gstar(12, p).unwrap();
        let r = verify_local_edge_maximality(&g, VertexSet::range(1), 2, 3, 6).unwrap();
        assert!(r.edges_ok() && r.majorization_ok());
        assert!(r.parts.iter().any(|x| x.order == 3 && x.best_alternative == 3));
        let g = extremal_gstar(13, StParams::new(2, 4).unwrap()).unwrap();
        let r = verify_local_edge_maximality(&g, VertexSet::range(1), 2, 4, 4).unwrap();
        assert!(r.edges_ok() && r.parts.iter().all(|x| x.order == 4));
        assert!(verify_local_edge_maximality(&g, VertexSet::range(2), 2, 4, 4).is_err());
        assert!(verify_local_edge_maximality(&g, VertexSet::range(1), 2, 4, 8).is_err());
    }
}
