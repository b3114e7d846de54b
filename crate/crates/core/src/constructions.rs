//! Named graph families: F_{s,t}(n), the star forest H_{s,t} and its
//! complement, the Petersen graph, H_{a,b,c} and the extremal graph G*.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// The pair (s, t) with the derived constants β, γ and the star size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StParams {
    pub s: usize,
    pub t: usize,
}

impl StParams {
    pub fn new(s: usize, t: usize) -> Result<Self> {
        if s < 2 || t < s {
            return Err(Error::InvalidParams(format!("need 2 <= s <= t, got s={s}, t={t}")));
        }
        Ok(StParams { s, t })
    }

    /// β = ⌊(t+1)/(s+1)⌋.
    pub fn beta(&self) -> usize {
        (self.t + 1) / (self.s + 1)
    }

    /// γ = min{s, ⌊(t+1)/2⌋}.
    pub fn gamma(&self) -> usize {
        self.s.min((self.t + 1) / 2)
    }

    /// Size of the last star of H_{s,t}.
    pub fn alpha_star(&self) -> usize {
        self.t - (self.beta() - 1) * (self.s + 1)
    }
}

/// n − s + 1 = p·t + r with 1 ≤ r ≤ t.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub p: usize,
    pub r: usize,
}

impl Decomposition {
    pub fn new(n: usize, params: StParams) -> Result<Self> {
        if n < params.s {
            return Err(Error::InvalidParams(format!("need n >= s, got n={n}, s={}", params.s)));
        }
        let m = n - params.s + 1;
        let p = (m - 1) / params.t;
        Ok(Decomposition { p, r: m - p * params.t })
    }
}

fn clique_union(blocks: &[Graph]) -> Result<Graph> {
    blocks.iter().try_fold(Graph::empty(0)?, |acc, b| acc.union(b))
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity(n))
    } else {
        Ok(())
    }
}

/// F_{s,t}(n) = K_{s−1} ∨ (pK_t ∪ K_r). The clique sits on `0..s−1`, then the
/// K_t blocks, then the K_r block.
pub fn f_st(n: usize, params: StParams) -> Result<Graph> {
    check_order(n)?;
    let d = Decomposition::new(n, params)?;
    let rest = Graph::complete(params.t)?.k_copies(d.p)?.union(&Graph::complete(d.r)?)?;
    Graph::complete(params.s - 1)?.join(&rest)
}

/// The equitable partition {K_{s−1}, union of K_t blocks, K_r block} of
/// [`f_st`], empty parts omitted.
pub fn f_st_parts(n: usize, params: StParams) -> Result<Vec<VertexSet>> {
    let d = Decomposition::new(n, params)?;
    let k = params.s - 1;
    let blocks = d.p * params.t;
    let mut parts = vec![VertexSet::range(k)];
    if blocks > 0 {
        parts.push(VertexSet::from_mask(VertexSet::range(k + blocks).mask() & !VertexSet::range(k).mask()));
    }
    parts.push(VertexSet::from_mask(VertexSet::range(n).mask() & !VertexSet::range(k + blocks).mask()));
    Ok(parts)
}

/// H_{s,t} = (β−1)K_{1,s} ∪ K_{1,α*}; every star lists its centre first.
pub fn h_st(params: StParams) -> Result<Graph> {
    let small = Graph::complete_bipartite(1, params.s)?.k_copies(params.beta() - 1)?;
    small.union(&Graph::complete_bipartite(1, params.alpha_star())?)
}

pub fn h_st_complement(params: StParams) -> Result<Graph> {
    Ok(h_st(params)?.complement())
}

/// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, &edges).expect("ten vertices fit")
}

pub fn petersen_complement() -> Graph {
    petersen().complement()
}

/// Vertex layout of [`h_abc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HabcLayout {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    pub w: usize,
    pub u1: usize,
    pub u2: usize,
}

impl HabcLayout {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let span = |lo: usize, len: usize| VertexSet::from_mask(VertexSet::range(lo + len).mask() & !VertexSet::range(lo).mask());
        let m = a + b + c;
        HabcLayout { a: span(0, a), b: span(a, b), c: span(a + b, c), w: m, u1: m + 1, u2: m + 2 }
    }
}

/// H_{a,b,c}: independent sets A, B, C then w, u1, u2 with w ~ A∪B,
/// u1 ~ A∪C, u2 ~ B∪C and the edge w–u1.
pub fn h_abc(a: usize, b: usize, c: usize) -> Result<Graph> {
    if b == 0 || c == 0 {
        return Err(Error::InvalidParams(format!("h_abc needs b, c >= 1, got ({a}, {b}, {c})")));
    }
    check_order(a + b + c + 3)?;
    let l = HabcLayout::new(a, b, c);
    let mut edges = vec![(l.w, l.u1)];
    edges.extend(l.a.union(l.b).iter().map(|x| (l.w, x)));
    edges.extend(l.a.union(l.c).iter().map(|x| (l.u1, x)));
    edges.extend(l.b.union(l.c).iter().map(|x| (l.u2, x)));
    Graph::from_edges(a + b + c + 3, &edges)
}

/// S¹(g): one minimum degree-sum edge subdivided.
pub fn s1(g: &Graph) -> Result<Graph> {
    g.subdivide_min_edge()
}

/// Which branch of the extremal construction applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GStarCase {
    /// r = 2, t = 8, β = 1: one Petersen complement block.
    PetersenBlock,
    /// r = β = 2: one subdivided H̄_{s,t} block.
    SubdividedBlock,
    /// r ≤ 2(β−1): r copies of H̄_{s,t}.
    StarForestBlocks,
    /// Otherwise: F_{s,t}(n).
    Generic,
}

impl GStarCase {
    pub fn select(t: usize, beta: usize, r: usize) -> Self {
        if r == 2 && t == 8 && beta == 1 {
            GStarCase::PetersenBlock
        } else if r == 2 && beta == 2 {
            GStarCase::SubdividedBlock
        } else if r <= 2 * beta.saturating_sub(1) {
            GStarCase::StarForestBlocks
        } else {
            GStarCase::Generic
        }
    }

    pub fn number(self) -> u8 {
        match self {
            GStarCase::PetersenBlock => 1,
            GStarCase::SubdividedBlock => 2,
            GStarCase::StarForestBlocks => 3,
            GStarCase::Generic => 4,
        }
    }
}

/// A block of G* − K.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Block {
    Complete(usize),
    HComplement,
    SubdividedHComplement,
    PetersenComplement,
}

/// Block layout of G*, without building it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GStarPlan {
    pub n: usize,
    pub params: StParams,
    pub decomposition: Decomposition,
    pub case: GStarCase,
    /// (block, multiplicity) in construction order.
    pub blocks: Vec<(Block, usize)>,
}

impl GStarPlan {
    pub fn new(n: usize, params: StParams) -> Result<Self> {
        let d = Decomposition::new(n, params)?;
        let case = GStarCase::select(params.t, params.beta(), d.r);
        let need = match case {
            GStarCase::PetersenBlock | GStarCase::SubdividedBlock => 1,
            GStarCase::StarForestBlocks => d.r,
            GStarCase::Generic => 0,
        };
        if d.p < need {
            return Err(Error::Infeasible(format!(
                "case {} at n={n}, (s,t)=({},{}) needs p >= {need}, but p={} (r={})",
                case.number(),
                params.s,
                params.t,
                d.p,
                d.r
            )));
        }
        let t = params.t;
        let blocks = match case {
            GStarCase::PetersenBlock => vec![(Block::Complete(t), d.p - 1), (Block::PetersenComplement, 1)],
            GStarCase::SubdividedBlock => vec![(Block::Complete(t), d.p - 1), (Block::SubdividedHComplement, 1)],
            GStarCase::StarForestBlocks => vec![(Block::Complete(t), d.p - d.r), (Block::HComplement, d.r)],
            GStarCase::Generic => vec![(Block::Complete(t), d.p), (Block::Complete(d.r), 1)],
        };
        Ok(GStarPlan { n, params, decomposition: d, case, blocks })
    }

    pub fn build(&self) -> Result<Graph> {
        check_order(self.n)?;
        let mut parts = Vec::new();
        for &(block, count) in &self.blocks {
            let g = match block {
                Block::Complete(k) => Graph::complete(k)?,
                Block::HComplement => h_st_complement(self.params)?,
                Block::SubdividedHComplement => s1(&h_st_complement(self.params)?)?,
                Block::PetersenComplement => petersen_complement(),
            };
            parts.extend(std::iter::repeat_n(g, count));
        }
        Graph::complete(self.params.s - 1)?.join(&clique_union(&parts)?)
    }
}

/// The extremal graph G* of order n; the clique K_{s−1} occupies `0..s−1`.
pub fn extremal_gstar(n: usize, params: StParams) -> Result<Graph> {
    check_order(n)?;
    GStarPlan::new(n, params)?.build()
}
