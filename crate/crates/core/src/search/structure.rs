use serde::Serialize;

use crate::constructions::{h_st_complement, petersen_complement, s1, StParams};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::iso::is_isomorphic;
use crate::minor::clique_dominating_set;

/// Components of G − K bucketed by order relative to t.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ComponentCensus {
    pub below_t: usize,
    pub order_t: usize,
    pub order_t1: usize,
    pub order_t2: usize,
    pub order_t3: usize,
    pub above_t3: usize,
}

impl ComponentCensus {
    pub fn total(&self) -> usize {
        self.below_t + self.order_t + self.order_t1 + self.order_t2 + self.order_t3 + self.above_t3
    }
}

pub fn component_census(g: &Graph, k: VertexSet, t: usize) -> ComponentCensus {
    let mut c = ComponentCensus::default();
    for comp in g.components_within(g.vertices().difference(k).mask()) {
        let slot = match comp.len() {
            x if x < t => &mut c.below_t,
            x if x == t => &mut c.order_t,
            x if x == t + 1 => &mut c.order_t1,
            x if x == t + 2 => &mut c.order_t2,
            x if x == t + 3 => &mut c.order_t3,
            _ => &mut c.above_t3,
        };
        *slot += 1;
    }
    c
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureCheck {
    pub name: &'static str,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub clique: VertexSet,
    pub census: ComponentCensus,
    pub checks: Vec<StructureCheck>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Checks the component structure of a candidate extremal graph: census
/// bounds and the isomorphism type of each component of order t, t+1 and
/// t+2.
pub fn verify_structure(gstar: &Graph, s: usize, t: usize) -> Result<StructureReport> {
    let params = StParams::new(s, t)?;
    let beta = params.beta();
    let clique = clique_dominating_set(gstar, s - 1)
        .ok_or_else(|| Error::Precondition(format!("no clique dominating set of size {}", s - 1)))?;
    let census = component_census(gstar, clique, t);
    let comps = gstar.components_within(gstar.vertices().difference(clique).mask());
    let of_order = |k: usize| comps.iter().filter(move |c| c.len() == k).map(|&c| gstar.induced(c));

    let kt = Graph::complete(t)?;
    let hbar = h_st_complement(params)?;
    let big_ok = match beta {
        1 => {
            let pc = petersen_complement();
            of_order(t + 2).all(|h| is_isomorphic(&h, &pc))
        }
        2 => {
            let sub = s1(&hbar)?;
            of_order(t + 2).all(|h| is_isomorphic(&h, &sub))
        }
        _ => census.order_t2 == 0,
    };
    let checks = vec![
        StructureCheck { name: "no component above order t+3", ok: census.above_t3 == 0 },
        StructureCheck { name: "no component of order t+3", ok: census.order_t3 == 0 },
        StructureCheck { name: "at most one component of order below t or t+2", ok: census.below_t + census.order_t2 <= 1 },
        StructureCheck { name: "at most 2(beta-1) components of order t+1", ok: census.order_t1 <= 2 * (beta - 1) },
        StructureCheck {
            name: "order t+1 present excludes orders t+2 and below t",
            ok: census.order_t1 == 0 || census.order_t2 + census.below_t == 0,
        },
        StructureCheck { name: "order t components are complete", ok: of_order(t).all(|h| h == kt) },
        StructureCheck { name: "order t+1 components are star forest complements", ok: of_order(t + 1).all(|h| is_isomorphic(&h, &hbar)) },
        StructureCheck { name: "order t+2 components match beta", ok: big_ok },
    ];
    Ok(StructureReport { n: gstar.order(), s, t, clique, census, checks })
}
