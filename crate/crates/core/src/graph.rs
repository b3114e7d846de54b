//! Simple undirected graphs on at most 64 vertices.
//!
//! Row `i` of the adjacency table is a bit mask of the neighbours of vertex
//! `i`. Every operation returns a fresh value; a [`Graph`] is never mutated
//! after construction.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices of some host graph, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(bit(v))
    }

    /// The first `n` vertices.
    pub const fn range(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | bit(v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !bit(v))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub const fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().fold(0, |m, v| m | bit(v)))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

/// Non-increasing degree sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts `values` into non-increasing order.
    pub fn new(mut values: Vec<usize>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Entries strictly below `bound`.
    pub fn below(&self, bound: usize) -> Vec<usize> {
        self.0.iter().copied().filter(|&d| d < bound).collect()
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        Ok(Graph { n, adj: [0; MAX_VERTICES] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry, loops and
    /// out-of-range bits.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let valid = low_bits(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                let v = (row & !valid).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if row & bit(i) != 0 {
                return Err(Error::Loop(i));
            }
            g.adj[i] = row;
        }
        for i in 0..n {
            for j in Bits(rows[i]) {
                if rows[j] & bit(i) == 0 {
                    return Err(Error::InvalidParams(format!("adjacency not symmetric at {i}-{j}")));
                }
            }
        }
        Ok(g)
    }

    /// Builds from an upper-triangle edge mask, edge `(i, j)` with `i < j`
    /// at bit `j(j-1)/2 + i` (the graph6 order). Panics if `n > 11`.
    pub fn from_triangle_mask(n: usize, mask: u64) -> Graph {
        assert!(n <= 11, "triangle masks hold at most 11 vertices");
        let mut adj = [0u64; MAX_VERTICES];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask & bit(k) != 0 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                k += 1;
            }
        }
        Graph { n, adj }
    }

    /// Inverse of [`Graph::from_triangle_mask`]. Panics if the order
    /// exceeds 11.
    pub fn triangle_mask(&self) -> u64 {
        assert!(self.n <= 11, "triangle masks hold at most 11 vertices");
        let mut mask = 0;
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.adj[i] & bit(j) != 0 {
                    mask |= bit(k);
                }
                k += 1;
            }
        }
        mask
    }

    #[inline]
    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet(low_bits(self.n))
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    /// Non-edges `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = low_bits(self.n);
        (0..self.n).flat_map(move |u| Bits(!self.adj[u] & all & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    // ---- constructive operators ------------------------------------------

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = low_bits(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// `K_{m,n}`; the first part is `0..m`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self> {
        if m + n > MAX_VERTICES {
            return Err(Error::Capacity(m + n));
        }
        let mut g = Graph::empty(m + n)?;
        let left = low_bits(m);
        let right = low_bits(m + n) & !left;
        for v in 0..m {
            g.adj[v] = right;
        }
        for v in m..m + n {
            g.adj[v] = left;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Disjoint union; `h` is relabelled to follow `g`.
    pub fn union(&self, h: &Graph) -> Result<Self> {
        let n = self.n + h.n;
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(self.rows());
        for v in 0..h.n {
            g.adj[self.n + v] = h.adj[v] << self.n;
        }
        Ok(g)
    }

    /// `k` disjoint copies.
    pub fn k_copies(&self, k: usize) -> Result<Self> {
        if self.n * k > MAX_VERTICES {
            return Err(Error::Capacity(self.n * k));
        }
        (0..k).try_fold(Graph::empty(0)?, |acc, _| acc.union(self))
    }

    /// Join: union plus every edge between the two sides.
    pub fn join(&self, h: &Graph) -> Result<Self> {
        let mut g = self.union(h)?;
        let left = low_bits(self.n);
        let right = low_bits(g.n) & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let mut g = self.clone();
        let all = low_bits(self.n);
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & all & !bit(v);
        }
        g
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(u, v));
        }
        let mut g = self.clone();
        g.adj[u] |= bit(v);
        g.adj[v] |= bit(u);
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    /// The edge subdivided by [`Graph::subdivide_min_edge`]: minimum degree
    /// sum, ties to the lexicographically smallest pair.
    pub fn min_degree_sum_edge(&self) -> Option<(usize, usize)> {
        self.edges().min_by_key(|&(u, v)| (self.degree(u) + self.degree(v), u, v))
    }

    /// `S^1(g)`: replaces a minimum degree-sum edge `uv` by a path `u-z-v`,
    /// `z` being the new last vertex.
    pub fn subdivide_min_edge(&self) -> Result<Self> {
        let (u, v) = self.min_degree_sum_edge().ok_or(Error::Edgeless)?;
        if self.n >= MAX_VERTICES {
            return Err(Error::Capacity(self.n + 1));
        }
        let z = self.n;
        let mut g = self.clone();
        g.n += 1;
        g.adj[u] = (g.adj[u] & !bit(v)) | bit(z);
        g.adj[v] = (g.adj[v] & !bit(u)) | bit(z);
        g.adj[z] = bit(u) | bit(v);
        Ok(g)
    }

    /// Contracts the edge `uv`. The merged vertex keeps index `min(u, v)`;
    /// vertices after `max(u, v)` shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let mut merged = self.adj;
        merged[keep] = (merged[keep] | merged[gone]) & !bit(keep) & !bit(gone);
        for w in Bits(self.adj[gone]) {
            if w != keep {
                merged[w] |= bit(keep);
            }
        }
        let keep_set = low_bits(self.n) & !bit(gone);
        let mut g = Graph::empty(self.n - 1)?;
        for (new, old) in Bits(keep_set).enumerate() {
            g.adj[new] = squeeze(merged[old] & keep_set, gone);
        }
        Ok(g)
    }

    /// Subgraph induced by `set`, relabelled in increasing vertex order.
    pub fn induced(&self, set: VertexSet) -> Self {
        let set = set.0 & low_bits(self.n);
        let order: Vec<usize> = Bits(set).collect();
        let mut g = Graph { n: order.len(), adj: [0; MAX_VERTICES] };
        for (i, &u) in order.iter().enumerate() {
            let mut row = 0;
            for (j, &v) in order.iter().enumerate() {
                if self.adj[u] & bit(v) != 0 {
                    row |= bit(j);
                }
            }
            g.adj[i] = row;
        }
        g
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for u in 0..self.n {
            let mut row = 0;
            for v in Bits(self.adj[u]) {
                row |= bit(perm[v]);
            }
            g.adj[perm[u]] = row;
        }
        g
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: u64, within: u64) -> u64 {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether `set` induces a connected subgraph (the empty set does not).
    pub fn is_connected_set(&self, set: u64) -> bool {
        set != 0 && self.reach(set & set.wrapping_neg(), set) == set
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.is_connected_set(low_bits(self.n))
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(low_bits(self.n))
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: u64) -> Vec<VertexSet> {
        let mut rest = within & low_bits(self.n);
        let mut out = Vec::new();
        while rest != 0 {
            let comp = self.reach(rest & rest.wrapping_neg(), rest);
            out.push(VertexSet(comp));
            rest &= !comp;
        }
        out
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for y in Bits(self.adj[x]) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

/// Removes bit `gone` from `row`, shifting higher bits down.
#[inline]
fn squeeze(row: u64, gone: usize) -> u64 {
    let low = row & low_bits(gone);
    let high = if gone + 1 >= 64 { 0 } else { (row >> (gone + 1)) << gone };
    low | high
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
