//! Exhaustive enumeration over labeled graphs: the brute-force A_α
//! maximizer, the small-order edge-maximality lemmas and the component
//! census of extremal constructions.

mod lemmas;
mod structure;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{extremal_gstar, StParams};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};
use crate::graph6;
use crate::iso::{canonical_mask, is_isomorphic};
use crate::minor::{has_kab_minor, has_minor};
use crate::spectral::{rho, AlphaParam};

pub use lemmas::*;
pub use structure::*;

/// Largest order for a full labeled scan.
pub const MAX_SEARCH_ORDER: usize = 8;

/// Re-evaluating ρ on the reported graph must land within this distance.
pub const REPRODUCE_TOL: f64 = 1e-10;

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// One bit per labeled graph on `n` vertices, indexed by triangle mask.
#[derive(Clone)]
pub struct MaskTable {
    n: usize,
    bits: Vec<u64>,
}

impl MaskTable {
    fn new(n: usize) -> Self {
        let total = 1u64 << binom2(n);
        MaskTable { n, bits: vec![0; total.div_ceil(64) as usize] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of labeled graphs, 2^C(n,2).
    pub fn total(&self) -> u64 {
        1u64 << binom2(self.n)
    }

    #[inline]
    pub fn get(&self, mask: u64) -> bool {
        self.bits[(mask >> 6) as usize] >> (mask & 63) & 1 == 1
    }

    #[inline]
    fn set(&mut self, mask: u64) {
        self.bits[(mask >> 6) as usize] |= 1 << (mask & 63);
    }

    pub fn count(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.total()).filter(|&m| self.get(m))
    }

    /// In the table, and adding any missing edge leaves it.
    pub fn is_edge_maximal(&self, mask: u64) -> bool {
        let full = (1u64 << binom2(self.n)) - 1;
        self.get(mask) && Bits(full & !mask).all(|e| !self.get(mask | 1 << e))
    }
}

/// Tabulates an isomorphism-invariant property closed under edge deletion.
/// A mask is tested directly only when every one-edge-smaller mask passed,
/// and direct tests are memoized by canonical form. Masks with fewer than
/// `free_below` edges pass without a test.
pub fn downward_closed_table(n: usize, free_below: usize, pred: impl Fn(&Graph) -> bool) -> Result<MaskTable> {
    if n > MAX_SEARCH_ORDER {
        return Err(Error::TooLarge(format!("labeled scans stop at {MAX_SEARCH_ORDER} vertices, got {n}")));
    }
    let mut table = MaskTable::new(n);
    let mut memo: HashMap<u64, bool> = HashMap::new();
    for m in 0..table.total() {
        let ok = if (m.count_ones() as usize) < free_below {
            true
        } else if Bits(m).all(|e| table.get(m & !(1 << e))) {
            let g = Graph::from_triangle_mask(n, m);
            *memo.entry(canonical_mask(&g)).or_insert_with(|| pred(&g))
        } else {
            false
        };
        if ok {
            table.set(m);
        }
    }
    Ok(table)
}

/// K_{s,t}-minor freedom of every labeled graph on `n` vertices.
pub fn minor_free_table(n: usize, params: StParams) -> Result<MaskTable> {
    downward_closed_table(n, params.s * params.t, |g| !has_kab_minor(g, params.s, params.t))
}

/// The (s,t)-property for every labeled graph on `n` vertices.
pub fn property_table(n: usize, params: StParams) -> Result<MaskTable> {
    downward_closed_table(n, params.t, |g| crate::minor::has_st_property(g, params))
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Evaluate only edge-maximal minor-free graphs.
    pub pruned: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { pruned: true, jobs: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub alpha: AlphaParam,
    pub pruned: bool,
    #[serde(skip)]
    pub best_graph: Graph,
    pub best_graph6: String,
    pub best_rho: f64,
    pub best_edges: usize,
    pub graphs_scanned: u64,
    pub minor_free_count: u64,
    /// Labeled graphs whose ρ entered the comparison.
    pub evaluated: u64,
    /// Isomorphism classes among the evaluated graphs.
    pub classes_evaluated: usize,
    pub rho_reproduced: bool,
    /// The best graph re-checked by the generic branch-set search.
    pub best_reverified_minor_free: bool,
    pub construction_rho: Option<f64>,
    /// Equal ρ, degree sequence and edge count, and an explicit isomorphism.
    pub matches_construction: bool,
}

/// The A_α maximizer among K_{s,t}-minor-free labeled graphs on `n`
/// vertices. Ties go to the smallest triangle mask.
pub fn brute_force_extremal(n: usize, params: StParams, alpha: AlphaParam, opts: SearchOptions) -> Result<SearchResult> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_SEARCH_ORDER {
        return Err(Error::TooLarge(format!("brute force covers n <= {MAX_SEARCH_ORDER}, got {n}")));
    }
    match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidParams(e.to_string()))?
            .install(|| run_search(n, params, alpha, opts)),
        None => run_search(n, params, alpha, opts),
    }
}

fn run_search(n: usize, params: StParams, alpha: AlphaParam, opts: SearchOptions) -> Result<SearchResult> {
    let table = minor_free_table(n, params)?;
    let candidates: Vec<u64> =
        table.masks().filter(|&m| !opts.pruned || table.is_edge_maximal(m)).collect();
    let keys: Vec<u64> = candidates.par_iter().map(|&m| canonical_mask(&Graph::from_triangle_mask(n, m))).collect();
    let mut classes: Vec<u64> = keys.clone();
    classes.sort_unstable();
    classes.dedup();
    let rhos: Vec<f64> = classes
        .par_iter()
        .map(|&c| rho(&Graph::from_triangle_mask(n, c), alpha))
        .collect::<Result<_>>()?;
    let class_rho: HashMap<u64, f64> = classes.iter().copied().zip(rhos).collect();

    let (mut best_mask, mut best_rho) = (candidates[0], f64::NEG_INFINITY);
    for (&m, k) in candidates.iter().zip(&keys) {
        let r = class_rho[k];
        if r > best_rho {
            best_rho = r;
            best_mask = m;
        }
    }
    let best_graph = Graph::from_triangle_mask(n, best_mask);
    let rho_reproduced = (rho(&best_graph, alpha)? - best_rho).abs() <= REPRODUCE_TOL;
    let best_reverified_minor_free = has_minor(&best_graph, &Graph::complete_bipartite(params.s, params.t)?)?.is_none();

    let (construction_rho, matches_construction) = match extremal_gstar(n, params) {
        Ok(g) => {
            let r = rho(&g, alpha)?;
            let same = (r - best_rho).abs() <= REPRODUCE_TOL
                && g.edge_count() == best_graph.edge_count()
                && g.degree_sequence() == best_graph.degree_sequence()
                && is_isomorphic(&g, &best_graph);
            (Some(r), same)
        }
        Err(Error::Infeasible(_)) => (None, false),
        Err(e) => return Err(e),
    };
    Ok(SearchResult {
        n,
        s: params.s,
        t: params.t,
        alpha,
        pruned: opts.pruned,
        best_graph6: graph6::encode(&best_graph),
        best_edges: best_graph.edge_count(),
        best_graph,
        best_rho,
        graphs_scanned: table.total(),
        minor_free_count: table.count(),
        evaluated: candidates.len() as u64,
        classes_evaluated: classes.len(),
        rho_reproduced,
        best_reverified_minor_free,
        construction_rho,
        matches_construction,
    })
}
