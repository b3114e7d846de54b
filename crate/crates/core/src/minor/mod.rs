//! Minor containment: a generic branch-set search, a contraction-based
//! engine for complete bipartite patterns, the (s,t)-property and the
//! clique-dominating-set reduction.

mod bipartite;
mod verify;

use std::str::FromStr;

use serde::Serialize;

use crate::constructions::StParams;
use crate::error::{Error, Result};
use crate::graph::{low_bits, Bits, Graph, VertexSet};
use crate::graph6;

pub use bipartite::{find_kab_minor, find_kab_minor_bounded, has_kab_minor};
pub use verify::*;

/// Largest host accepted by [`has_minor`].
pub const GENERIC_HOST_LIMIT: usize = 14;

/// Parameters of the (s,t)-property; γ comes from [`StParams::gamma`].
pub type PropertyParams = StParams;

/// Disjoint connected branch sets, one per pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorWitness {
    /// Checks disjointness, connectivity and that every pattern edge is
    /// realized by a host edge between the corresponding sets.
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> std::result::Result<(), String> {
        if self.branch_sets.len() != pattern.order() {
            return Err(format!("{} branch sets for a pattern of order {}", self.branch_sets.len(), pattern.order()));
        }
        let mut seen = 0u64;
        for (i, b) in self.branch_sets.iter().enumerate() {
            if b.mask() & !low_bits(host.order()) != 0 {
                return Err(format!("branch set {i} leaves the host"));
            }
            if b.mask() & seen != 0 {
                return Err(format!("branch set {i} overlaps an earlier one"));
            }
            if !host.is_connected_set(b.mask()) {
                return Err(format!("branch set {i} is empty or disconnected"));
            }
            seen |= b.mask();
        }
        for (i, j) in pattern.edges() {
            let reach = self.branch_sets[i].iter().fold(0u64, |m, v| m | host.neighbors(v));
            if reach & self.branch_sets[j].mask() == 0 {
                return Err(format!("no host edge between branch sets {i} and {j}"));
            }
        }
        Ok(())
    }
}

/// A minor pattern: `Kst:s,t` for K_{s,t}, or a graph6 string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    CompleteBipartite(usize, usize),
    Graph(Graph),
}

impl Pattern {
    pub fn graph(&self) -> Result<Graph> {
        match self {
            Pattern::CompleteBipartite(a, b) => Graph::complete_bipartite(*a, *b),
            Pattern::Graph(g) => Ok(g.clone()),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if let Some(rest) = spec.strip_prefix("Kst:") {
            let bad = || Error::Pattern(format!("expected Kst:s,t with positive integers, got {spec:?}"));
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            let parse = |x: &str| -> Result<usize> {
                if x.is_empty() || !x.bytes().all(|c| c.is_ascii_digit()) {
                    return Err(bad());
                }
                x.parse::<usize>().map_err(|_| bad())
            };
            let (a, b) = (parse(a)?, parse(b)?);
            if a == 0 || b == 0 {
                return Err(bad());
            }
            if a + b > crate::MAX_VERTICES {
                return Err(Error::Capacity(a + b));
            }
            return Ok(Pattern::CompleteBipartite(a, b));
        }
        graph6::decode_str(spec).map(Pattern::Graph).map_err(|e| Error::Pattern(e.to_string()))
    }
}

// ---- generic branch-set search ----------------------------------------

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    /// For each pattern vertex, an earlier twin in `order` whose branch set
    /// must have a smaller minimum vertex.
    twin_before: Vec<Option<usize>>,
    sets: Vec<u64>,
    placed: Vec<bool>,
}

impl Search<'_> {
    fn neighborhood(&self, set: u64) -> u64 {
        Bits(set).fold(0u64, |m, v| m | self.host.neighbors(v)) & !set
    }

    fn run(&mut self, idx: usize, used: u64) -> bool {
        let k = self.order.len();
        if idx == k {
            return true;
        }
        let i = self.order[idx];
        let avail = low_bits(self.host.order()) & !used;
        let remaining = k - idx;
        if (avail.count_ones() as usize) < remaining {
            return false;
        }
        let required: Vec<u64> = Bits(self.pattern.neighbors(i))
            .filter(|&j| self.placed[j])
            .map(|j| self.neighborhood(self.sets[j]))
            .collect();
        if required.iter().any(|&r| r & avail == 0) {
            return false;
        }
        let has_future = Bits(self.pattern.neighbors(i)).any(|j| !self.placed[j]);
        let max_size = avail.count_ones() as usize - (remaining - 1);
        let min_root = self.twin_before[i].map_or(0, |j| self.sets[j].trailing_zeros() as usize + 1);
        for root in Bits(avail & !low_bits(min_root)) {
            let start = 1u64 << root;
            let forbidden = low_bits(root) | used;
            let frontier = self.host.neighbors(root) & !forbidden;
            if self.extend(idx, i, start, frontier, forbidden, &required, has_future, max_size, used) {
                return true;
            }
        }
        false
    }

    /// Enumerates connected sets containing `set` by extension from
    /// `frontier`, each exactly once, and recurses on every admissible one.
    #[allow(clippy::too_many_arguments)]
    fn extend(
        &mut self,
        idx: usize,
        i: usize,
        set: u64,
        frontier: u64,
        forbidden: u64,
        required: &[u64],
        has_future: bool,
        max_size: usize,
        used: u64,
    ) -> bool {
        let satisfied = required.iter().all(|&r| r & set != 0);
        if satisfied && self.admissible(i, set, used) {
            self.sets[i] = set;
            self.placed[i] = true;
            let found = self.run(idx + 1, used | set);
            self.placed[i] = false;
            if found {
                return true;
            }
        }
        // without later neighbours only inclusion-minimal sets matter
        if (satisfied && !has_future) || set.count_ones() as usize >= max_size {
            return false;
        }
        let mut forb = forbidden;
        for w in Bits(frontier) {
            let next = set | (1u64 << w);
            let next_frontier = (frontier | self.host.neighbors(w)) & !next & !forb;
            if self.extend(idx, i, next, next_frontier, forb, required, has_future, max_size, used) {
                return true;
            }
            forb |= 1u64 << w;
        }
        false
    }

    /// Forward check: every unplaced pattern vertex still has a component
    /// of the free vertices touching all its placed neighbours.
    fn admissible(&self, i: usize, set: u64, used: u64) -> bool {
        let free = low_bits(self.host.order()) & !used & !set;
        let remaining = self.order.len() - self.placed.iter().filter(|&&p| p).count() - 1;
        if (free.count_ones() as usize) < remaining {
            return false;
        }
        // each unplaced neighbour of a placed set needs its own free neighbour
        for j in 0..self.pattern.order() {
            if !(self.placed[j] || j == i) {
                continue;
            }
            let pending = Bits(self.pattern.neighbors(j)).filter(|&l| !self.placed[l] && l != i).count();
            let b = if j == i { set } else { self.sets[j] };
            if pending > 0 && ((self.neighborhood(b) & free).count_ones() as usize) < pending {
                return false;
            }
        }
        let comps = self.host.components_within(free);
        for l in 0..self.pattern.order() {
            if self.placed[l] || l == i {
                continue;
            }
            let reqs: Vec<u64> = Bits(self.pattern.neighbors(l))
                .filter(|&j| self.placed[j] || j == i)
                .map(|j| self.neighborhood(if j == i { set } else { self.sets[j] }))
                .collect();
            if !comps.iter().any(|c| reqs.iter().all(|&r| r & c.mask() != 0)) {
                return false;
            }
        }
        true
    }
}

/// Searches for `pattern` as a minor of `host` by growing one connected
/// branch set per pattern vertex. Complete and deterministic; hosts above
/// [`GENERIC_HOST_LIMIT`] vertices are refused.
pub fn has_minor(host: &Graph, pattern: &Graph) -> Result<Option<MinorWitness>> {
    if pattern.order() == 0 {
        return Err(Error::InvalidParams("pattern must have at least one vertex".into()));
    }
    if host.order() > GENERIC_HOST_LIMIT {
        return Err(Error::TooLarge(format!(
            "generic minor search is limited to {GENERIC_HOST_LIMIT} host vertices, got {}",
            host.order()
        )));
    }
    if pattern.order() > host.order() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    // relabel the host so that high-degree vertices are tried first
    let mut by_degree: Vec<usize> = (0..host.order()).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(host.degree(v)), v));
    let mut perm = vec![0; host.order()];
    for (new, &old) in by_degree.iter().enumerate() {
        perm[old] = new;
    }
    let relabelled = host.permuted(&perm);

    let mut order: Vec<usize> = (0..pattern.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
    let mut twin_before = vec![None; pattern.order()];
    for (x, &i) in order.iter().enumerate() {
        twin_before[i] = order[..x].iter().rev().copied().find(|&j| {
            pattern.neighbors(i) & !(1u64 << j) == pattern.neighbors(j) & !(1u64 << i)
        });
    }
    let mut search = Search {
        host: &relabelled,
        pattern,
        order,
        twin_before,
        sets: vec![0; pattern.order()],
        placed: vec![false; pattern.order()],
    };
    if !search.run(0, 0) {
        return Ok(None);
    }
    let branch_sets = search
        .sets
        .iter()
        .map(|&m| Bits(m).map(|v| by_degree[v]).collect::<VertexSet>())
        .collect();
    let witness = MinorWitness { branch_sets };
    if let Err(e) = witness.validate(host, pattern) {
        unreachable!("minor search produced an invalid witness: {e}");
    }
    Ok(Some(witness))
}

/// Whether `g` has no K_{s,t} minor.
pub fn is_kst_minor_free(g: &Graph, s: usize, t: usize) -> bool {
    !has_kab_minor(g, s, t)
}

/// K_{a,b}-minor freedom for every a + b = t + 1 with a ≤ γ.
pub fn has_st_property(g: &Graph, params: PropertyParams) -> bool {
    (1..=params.gamma()).all(|a| !has_kab_minor(g, a, params.t + 1 - a))
}

/// The same property decided by the generic branch-set search.
pub fn has_st_property_generic(g: &Graph, params: PropertyParams) -> Result<bool> {
    for a in 1..=params.gamma() {
        if has_minor(g, &Graph::complete_bipartite(a, params.t + 1 - a)?)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The first `size` vertices of degree n − 1, if there are that many.
pub fn clique_dominating_set(g: &Graph, size: usize) -> Option<VertexSet> {
    let n = g.order();
    let full: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 == n).take(size).collect();
    (full.len() == size).then(|| full.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{f_st, petersen};

    fn kab(a: usize, b: usize) -> Graph {
        Graph::complete_bipartite(a, b).unwrap()
    }

    #[test]
    fn generic_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let w = has_minor(&c5, &kab(2, 2)).unwrap().unwrap();
        assert!(w.validate(&c5, &kab(2, 2)).is_ok());
        assert!(has_minor(&Graph::complete(4).unwrap(), &kab(2, 3)).unwrap().is_none());
        let p = petersen();
        let k5 = Graph::complete(5).unwrap();
        let w = has_minor(&p, &k5).unwrap().unwrap();
        assert!(w.validate(&p, &k5).is_ok());
        assert!(has_minor(&Graph::complete(15).unwrap(), &k5).is_err());
        assert!(has_minor(&k5, &Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn generic_negative_cases() {
        // K_4 is not a minor of any outerplanar graph; C_6 plus chords 0-2, 0-3, 0-4
        let fan = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(has_minor(&fan, &Graph::complete(4).unwrap()).unwrap().is_none());
        assert!(has_minor(&fan, &kab(2, 3)).unwrap().is_none());
        assert!(has_minor(&Graph::path(8).unwrap(), &kab(1, 3)).unwrap().is_none());
        assert!(has_minor(&petersen(), &Graph::complete(6).unwrap()).unwrap().is_none());
    }

    #[test]
    fn kst_freeness() {
        let p = StParams::new(2, 3).unwrap();
        assert!(is_kst_minor_free(&f_st(12, p).unwrap(), 2, 3));
        assert!(!is_kst_minor_free(&Graph::complete(5).unwrap(), 2, 3));
        assert!(is_kst_minor_free(&Graph::path(9).unwrap(), 2, 2));
    }

    #[test]
    fn pattern_parsing() {
        assert_eq!("Kst:2,3".parse::<Pattern>().unwrap(), Pattern::CompleteBipartite(2, 3));
        assert_eq!("D~{".parse::<Pattern>().unwrap(), Pattern::Graph(Graph::complete(5).unwrap()));
        for bad in ["Kst:", "Kst:2", "Kst:0,3", "Kst:2,-3", "Kst:a,b", "Kst:2,3,4", "Kst:40,40", "Kst: 2,3", ""] {
            assert!(bad.parse::<Pattern>().is_err(), "{bad}");
        }
    }

    #[test]
    fn clique_dominating() {
        let p = StParams::new(3, 4).unwrap();
        assert_eq!(clique_dominating_set(&f_st(11, p).unwrap(), 2), Some(VertexSet::range(2)));
        assert_eq!(clique_dominating_set(&Graph::cycle(5).unwrap(), 1), None);
        assert_eq!(clique_dominating_set(&Graph::complete(6).unwrap(), 4), Some(VertexSet::range(4)));
    }

    #[test]
    fn witness_validation_rejects() {
        let g = Graph::path(4).unwrap();
        let p = Graph::complete(2).unwrap();
        let ok = MinorWitness { branch_sets: vec![VertexSet::from_iter([0, 1]), VertexSet::singleton(2)] };
        assert!(ok.validate(&g, &p).is_ok());
        let overlap = MinorWitness { branch_sets: vec![VertexSet::from_iter([0, 1]), VertexSet::singleton(1)] };
        assert!(overlap.validate(&g, &p).is_err());
        let split = MinorWitness { branch_sets: vec![VertexSet::from_iter([0, 2]), VertexSet::singleton(3)] };
        assert!(split.validate(&g, &p).is_err());
        let far = MinorWitness { branch_sets: vec![VertexSet::singleton(0), VertexSet::singleton(3)] };
        assert!(far.validate(&g, &p).is_err());
    }
}
