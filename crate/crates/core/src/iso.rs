//! Colour refinement, canonical labelling and isomorphism testing.
//!
//! Canonical forms come from individualization-refinement with
//! automorphism pruning. The colouring at every node depends only on the
//! isomorphism type of the (graph, prefix) pair, so the minimal leaf code is
//! a complete invariant.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::graph::{Bits, Graph};

/// Refines `colors` to the coarsest equitable partition finer than it.
/// Colours are renumbered `0..k` by sorted signature, which keeps them
/// independent of vertex labels.
pub fn refine(g: &Graph, colors: &mut [u32]) {
    let n = g.order();
    let mut classes = count_classes(colors);
    let mut sigs: Vec<(u32, Vec<u32>, usize)> = Vec::with_capacity(n);
    loop {
        sigs.clear();
        for v in 0..n {
            let mut nb: Vec<u32> = Bits(g.neighbors(v)).map(|u| colors[u]).collect();
            nb.sort_unstable();
            sigs.push((colors[v], nb, v));
        }
        sigs.sort_unstable();
        let mut next = 0u32;
        for k in 0..n {
            if k > 0 && (sigs[k].0 != sigs[k - 1].0 || sigs[k].1 != sigs[k - 1].1) {
                next += 1;
            }
            colors[sigs[k].2] = next;
        }
        let now = if n == 0 { 0 } else { next as usize + 1 };
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Stable colouring starting from the uniform one.
pub fn stable_coloring(g: &Graph) -> Vec<u32> {
    let mut colors = vec![0; g.order()];
    refine(g, &mut colors);
    colors
}

/// Cheap isomorphism invariant: order, size and the refined colour-class
/// profile.
pub fn invariant_hash(g: &Graph) -> u64 {
    let colors = stable_coloring(g);
    let mut profile: Vec<(u32, usize)> = colors.iter().map(|&c| (c, 0)).collect();
    for (v, &c) in colors.iter().enumerate() {
        profile[v] = (c, g.degree(v));
    }
    profile.sort_unstable();
    let mut h = DefaultHasher::new();
    g.order().hash(&mut h);
    g.edge_count().hash(&mut h);
    profile.hash(&mut h);
    h.finish()
}

struct Canon<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Canon<'_> {
    fn search(&mut self, mut colors: Vec<u32>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut colors);
        let n = self.g.order();
        let Some(target) = first_split_cell(&colors) else {
            let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let code = self.g.permuted(&perm).rows().to_vec();
            match &self.best {
                None => self.best = Some((code, perm)),
                Some((best, best_perm)) => {
                    if code < *best {
                        self.best = Some((code, perm));
                    } else if code == *best {
                        let mut inv = vec![0; n];
                        for (v, &p) in best_perm.iter().enumerate() {
                            inv[p] = v;
                        }
                        self.autos.push(perm.iter().map(|&p| inv[p]).collect());
                    }
                }
            }
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() && self.same_orbit_as_any(w, &explored, prefix) {
                continue;
            }
            let mut child: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
            child[w] -= 1;
            prefix.push(w);
            self.search(child, prefix);
            prefix.pop();
            explored.push(w);
        }
    }

    fn same_orbit_as_any(&self, w: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().any(|&v| a[v] != v) {
                continue;
            }
            any = true;
            for v in 0..n {
                let (x, y) = (find(&mut parent, v), find(&mut parent, a[v]));
                if x != y {
                    parent[x] = y;
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&v| find(&mut parent, v) == rw)
    }
}

fn first_split_cell(colors: &[u32]) -> Option<u32> {
    let mut sizes = vec![0usize; colors.len()];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    sizes.iter().position(|&s| s > 1).map(|c| c as u32)
}

/// Canonical relabelling of `g` together with the permutation used
/// (vertex `v` of `g` becomes `perm[v]`).
pub fn canonical_labeling(g: &Graph) -> (Graph, Vec<usize>) {
    let mut canon = Canon { g, best: None, autos: Vec::new() };
    canon.search(vec![0; g.order()], &mut Vec::new());
    let (_, perm) = canon.best.expect("search visits at least one leaf");
    (g.permuted(&perm), perm)
}

pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).0
}

/// Canonical form packed as an upper-triangle mask; requires order ≤ 11.
pub fn canonical_mask(g: &Graph) -> u64 {
    canonical_form(g).triangle_mask()
}

/// An isomorphism `g → h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let (cg, pg) = canonical_labeling(g);
    let (ch, ph) = canonical_labeling(h);
    if cg != ch {
        return None;
    }
    let mut inv = vec![0; ph.len()];
    for (v, &p) in ph.iter().enumerate() {
        inv[p] = v;
    }
    Some(pg.iter().map(|&p| inv[p]).collect())
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_map(g: &Graph, h: &Graph, map: &[usize]) -> bool {
        g.edges().all(|(u, v)| h.has_edge(map[u], map[v])) && g.edge_count() == h.edge_count()
    }

    #[test]
    fn relabelled_graphs_share_canonical_form() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        let h = g.permuted(&perm);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        let map = find_isomorphism(&g, &h).unwrap();
        assert!(check_map(&g, &h, &map));
    }

    #[test]
    fn distinguishes_regular_graphs() {
        // C6 vs two triangles: same degree sequence, refinement cannot split
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::complete(3).unwrap().k_copies(2).unwrap();
        assert!(!is_isomorphic(&c6, &tt));
        assert_eq!(invariant_hash(&c6), invariant_hash(&tt));
    }

    #[test]
    fn symmetric_graphs_finish() {
        for g in [
            Graph::complete(40).unwrap(),
            Graph::empty(30).unwrap(),
            Graph::complete(4).unwrap().k_copies(12).unwrap(),
            Graph::complete_bipartite(20, 20).unwrap(),
        ] {
            let h = g.permuted(&(0..g.order()).rev().collect::<Vec<_>>());
            assert_eq!(canonical_form(&g), canonical_form(&h));
        }
    }

    #[test]
    fn canonical_form_is_isomorphic_copy() {
        let g = Graph::path(7).unwrap();
        let c = canonical_form(&g);
        assert_eq!(c.degree_sequence(), g.degree_sequence());
        assert!(is_isomorphic(&c, &g));
        assert_eq!(canonical_form(&c), c);
    }
}
