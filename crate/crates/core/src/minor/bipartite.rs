//! K_{a,b} minors by depth-first edge contraction.
//!
//! A connected graph has a K_{a,b} minor iff some sequence of contractions
//! reaches a graph with a K_{a,b} subgraph. States are deduplicated up to
//! isomorphism, and vertices that cannot matter are removed first: isolated
//! vertices always, pendant vertices when min(a,b) ≥ 2, and degree-2
//! vertices are suppressed when min(a,b) ≥ 3.

use std::collections::HashSet;

use super::MinorWitness;
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph, VertexSet};
use crate::iso::canonical_form;

#[derive(Clone)]
struct State {
    alive: u64,
    rows: [u64; 64],
    sets: [u64; 64],
}

impl State {
    fn new(g: &Graph, comp: u64) -> Self {
        let mut s = State { alive: comp, rows: [0; 64], sets: [0; 64] };
        for v in Bits(comp) {
            s.rows[v] = g.neighbors(v) & comp;
            s.sets[v] = bit(v);
        }
        s
    }

    fn order(&self) -> usize {
        self.alive.count_ones() as usize
    }

    fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    fn edge_count(&self) -> usize {
        Bits(self.alive).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    fn contract(&mut self, keep: usize, gone: usize) {
        let nb = self.rows[gone] & !bit(keep);
        for x in Bits(nb) {
            self.rows[x] = (self.rows[x] & !bit(gone)) | bit(keep);
        }
        self.rows[keep] = (self.rows[keep] | nb) & !bit(gone) & !bit(keep);
        self.rows[gone] = 0;
        self.alive &= !bit(gone);
        self.sets[keep] |= self.sets[gone];
        self.sets[gone] = 0;
    }

    fn delete(&mut self, v: usize) {
        for x in Bits(self.rows[v]) {
            self.rows[x] &= !bit(v);
        }
        self.rows[v] = 0;
        self.alive &= !bit(v);
        self.sets[v] = 0;
    }

    fn reduce(&mut self, lo: usize) {
        loop {
            let Some(v) = Bits(self.alive).find(|&v| {
                let d = self.degree(v);
                d == 0 || (lo >= 2 && d == 1) || (lo >= 3 && d == 2)
            }) else {
                return;
            };
            if self.degree(v) == 2 {
                let x = self.rows[v].trailing_zeros() as usize;
                self.contract(x, v);
            } else {
                self.delete(v);
            }
        }
    }

    fn compact(&self) -> Graph {
        let idx: Vec<usize> = Bits(self.alive).collect();
        let mut pos = [0usize; 64];
        for (i, &v) in idx.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = idx.iter().map(|&v| Bits(self.rows[v]).fold(0u64, |m, u| m | bit(pos[u]))).collect();
        Graph::from_rows(&rows).expect("compacted rows are symmetric")
    }

    /// A K_{a,b} subgraph with a ≤ b, as (a-side, b-side).
    fn kab_subgraph(&self, a: usize, b: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        let cand: Vec<usize> = Bits(self.alive).filter(|&v| self.degree(v) >= b).collect();
        let mut chosen = Vec::with_capacity(a);
        self.pick(&cand, 0, a, b, self.alive, &mut chosen).map(|common| {
            let side: Vec<usize> = Bits(common).take(b).collect();
            (chosen, side)
        })
    }

    fn pick(&self, cand: &[usize], from: usize, a: usize, b: usize, common: u64, chosen: &mut Vec<usize>) -> Option<u64> {
        if chosen.len() == a {
            return Some(common);
        }
        for i in from..cand.len() {
            if cand.len() - i < a - chosen.len() {
                break;
            }
            let v = cand[i];
            let next = common & self.rows[v];
            if (next.count_ones() as usize) < b {
                continue;
            }
            chosen.push(v);
            if let Some(c) = self.pick(cand, i + 1, a, b, next, chosen) {
                return Some(c);
            }
            chosen.pop();
        }
        None
    }
}

struct Dfs {
    a: usize,
    b: usize,
    seen: HashSet<Graph>,
    states: usize,
    budget: Option<usize>,
}

impl Dfs {
    fn run(&mut self, st: &State) -> Result<Option<(Vec<u64>, Vec<u64>)>> {
        self.states += 1;
        if self.budget.is_some_and(|b| self.states > b) {
            return Err(Error::TooLarge(format!("K_{{{},{}}} minor search exceeded {} states", self.a, self.b, self.states - 1)));
        }
        let (a, b) = (self.a, self.b);
        if st.order() < a + b || st.edge_count() < a * b {
            return Ok(None);
        }
        if let Some((x, y)) = st.kab_subgraph(a, b) {
            return Ok(Some((x.iter().map(|&v| st.sets[v]).collect(), y.iter().map(|&v| st.sets[v]).collect())));
        }
        if st.order() == a + b {
            return Ok(None);
        }
        let mut edges: Vec<(usize, usize)> =
            Bits(st.alive).flat_map(|u| Bits(st.rows[u] & !((bit(u) << 1) - 1)).map(move |v| (u, v))).collect();
        edges.sort_by_key(|&(u, v)| st.degree(u) + st.degree(v));
        let dedupe = st.order() >= a + b + 2;
        for (u, v) in edges {
            let mut next = st.clone();
            next.contract(u, v);
            next.reduce(a);
            if dedupe && !self.seen.insert(canonical_form(&next.compact())) {
                continue;
            }
            if let Some(w) = self.run(&next)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }
}

/// K_{1,b}: a connected centre set with at least b outside neighbours.
fn star_minor(g: &Graph, comp: u64, b: usize) -> Option<MinorWitness> {
    fn grow(g: &Graph, comp: u64, b: usize, set: u64, frontier: u64, forbidden: u64) -> Option<u64> {
        let nb = Bits(set).fold(0u64, |m, v| m | g.neighbors(v)) & comp & !set;
        if nb.count_ones() as usize >= b {
            return Some(set);
        }
        if ((comp & !set).count_ones() as usize) <= b {
            return None;
        }
        let mut forb = forbidden;
        for w in Bits(frontier) {
            let next = set | bit(w);
            if let Some(s) = grow(g, comp, b, next, (frontier | g.neighbors(w)) & comp & !next & !forb, forb) {
                return Some(s);
            }
            forb |= bit(w);
        }
        None
    }
    if let Some(v) = Bits(comp).find(|&v| g.degree(v) >= b) {
        let mut sets = vec![VertexSet::singleton(v)];
        sets.extend(Bits(g.neighbors(v)).take(b).map(VertexSet::singleton));
        return Some(MinorWitness { branch_sets: sets });
    }
    for root in Bits(comp) {
        let forbidden = (bit(root) - 1) & comp;
        let frontier = g.neighbors(root) & comp & !forbidden;
        if let Some(centre) = grow(g, comp, b, bit(root), frontier, forbidden) {
            let nb = Bits(centre).fold(0u64, |m, v| m | g.neighbors(v)) & !centre;
            let mut sets = vec![VertexSet::from_mask(centre)];
            sets.extend(Bits(nb).take(b).map(VertexSet::singleton));
            return Some(MinorWitness { branch_sets: sets });
        }
    }
    None
}

fn search(g: &Graph, a: usize, b: usize, budget: Option<usize>) -> Result<Option<MinorWitness>> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParams("both sides of K_{a,b} must be non-empty".into()));
    }
    let swapped = a > b;
    let (lo, hi) = if swapped { (b, a) } else { (a, b) };
    for comp in g.components() {
        let comp = comp.mask();
        if (comp.count_ones() as usize) < lo + hi {
            continue;
        }
        let found = if lo == 1 {
            star_minor(g, comp, hi).map(|w| (vec![w.branch_sets[0].mask()], w.branch_sets[1..].iter().map(|s| s.mask()).collect()))
        } else {
            let mut st = State::new(g, comp);
            st.reduce(lo);
            let mut dfs = Dfs { a: lo, b: hi, seen: HashSet::new(), states: 0, budget };
            dfs.run(&st)?
        };
        if let Some((x, y)) = found {
            let (first, second) = if swapped { (y, x) } else { (x, y) };
            let branch_sets = first.into_iter().chain(second).map(VertexSet::from_mask).collect();
            return Ok(Some(MinorWitness { branch_sets }));
        }
    }
    Ok(None)
}

/// A K_{a,b} minor of `g`, if any; the first `a` branch sets form one side.
pub fn find_kab_minor(g: &Graph, a: usize, b: usize) -> Option<MinorWitness> {
    search(g, a, b, None).expect("unbounded search with positive sides")
}

/// Like [`find_kab_minor`], giving up with `TooLarge` after `max_states`
/// contraction states.
pub fn find_kab_minor_bounded(g: &Graph, a: usize, b: usize, max_states: usize) -> Result<Option<MinorWitness>> {
    search(g, a, b, Some(max_states))
}

pub fn has_kab_minor(g: &Graph, a: usize, b: usize) -> bool {
    find_kab_minor(g, a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{f_st, petersen, petersen_complement, StParams};

    fn check(g: &Graph, a: usize, b: usize) -> bool {
        match find_kab_minor(g, a, b) {
            Some(w) => {
                w.validate(g, &Graph::complete_bipartite(a, b).unwrap()).unwrap();
                true
            }
            None => false,
        }
    }

    #[test]
    fn small_cases() {
        assert!(check(&Graph::cycle(5).unwrap(), 2, 2));
        assert!(!check(&Graph::complete(4).unwrap(), 2, 3));
        assert!(check(&Graph::complete(5).unwrap(), 2, 3));
        assert!(check(&Graph::complete(5).unwrap(), 3, 2));
        assert!(!check(&Graph::path(6).unwrap(), 1, 3));
        assert!(check(&Graph::complete_bipartite(1, 4).unwrap(), 1, 4));
        assert!(!check(&Graph::complete_bipartite(1, 4).unwrap(), 1, 5));
        assert!(!check(&Graph::empty(9).unwrap(), 1, 1));
        assert!(find_kab_minor_bounded(&Graph::path(3).unwrap(), 0, 2, 100).is_err());
    }

    #[test]
    fn petersen_minors() {
        let p = petersen();
        assert!(check(&p, 3, 3));
        assert!(check(&p, 1, 6));
        assert!(!check(&p, 1, 9));
        let pc = petersen_complement();
        assert!(check(&pc, 1, 6));
        for (a, b) in [(1, 8), (2, 7), (3, 6), (4, 5)] {
            assert!(!check(&pc, a, b), "K_{{{a},{b}}}");
        }
    }

    #[test]
    fn extremal_construction_is_free() {
        for (s, t, n) in [(2, 3, 12), (2, 4, 15), (3, 3, 14), (3, 5, 20)] {
            let p = StParams::new(s, t).unwrap();
            let g = f_st(n, p).unwrap();
            assert!(!check(&g, s, t), "F_{{{s},{t}}}({n})");
            assert!(check(&g.add_edge(s, n - 1).unwrap(), s, t) || g.has_edge(s, n - 1));
        }
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::complete(12).unwrap().delete_edge(0, 1).unwrap();
        assert!(matches!(find_kab_minor_bounded(&petersen(), 4, 4, 1), Err(Error::TooLarge(_)) | Ok(None)));
        assert!(find_kab_minor_bounded(&g, 2, 5, 10).unwrap().is_some());
    }
}
