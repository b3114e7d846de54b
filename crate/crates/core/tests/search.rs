use kst_core::constructions::{extremal_gstar, f_st, h_abc, StParams};
use kst_core::iso::is_isomorphic;
use kst_core::minor::{has_minor, has_st_property};
use kst_core::search::*;
use kst_core::spectral::{rho, AlphaParam};
use kst_core::{Graph, VertexSet};

fn st(s: usize, t: usize) -> StParams {
    StParams::new(s, t).unwrap()
}

fn al(a: f64) -> AlphaParam {
    AlphaParam::new(a).unwrap()
}

#[test]
fn pruned_and_full_agree() {
    for (s, t, n) in [(2, 2, 5), (2, 2, 6), (2, 3, 6)] {
        let a = al(0.4);
        let pruned = brute_force_extremal(n, st(s, t), a, SearchOptions { pruned: true, jobs: None }).unwrap();
        let full = brute_force_extremal(n, st(s, t), a, SearchOptions { pruned: false, jobs: Some(1) }).unwrap();
        assert!((pruned.best_rho - full.best_rho).abs() <= 1e-10, "({s},{t},{n})");
        assert_eq!(pruned.minor_free_count, full.minor_free_count);
        assert!(pruned.evaluated < full.evaluated);
    }
}

#[test]
fn best_graph_dominates_construction() {
    for (s, t, a, n) in [(2, 2, 0.5, 6), (2, 3, 0.3, 6), (2, 3, 0.3, 7)] {
        let r = brute_force_extremal(n, st(s, t), al(a), SearchOptions::default()).unwrap();
        let g = extremal_gstar(n, st(s, t)).unwrap();
        assert!(r.best_rho >= rho(&g, al(a)).unwrap() - 1e-10);
        assert!(r.best_rho >= rho(&f_st(n, st(s, t)).unwrap(), al(a)).unwrap() - 1e-10);
        assert!(r.rho_reproduced && r.best_reverified_minor_free);
        let pat = Graph::complete_bipartite(s, t).unwrap();
        assert!(has_minor(&r.best_graph, &pat).unwrap().is_none());
        assert_eq!(r.graphs_scanned, 1 << (n * (n - 1) / 2));
    }
}

#[test]
fn search_is_deterministic() {
    let run = || brute_force_extremal(6, st(2, 3), al(0.3), SearchOptions::default()).unwrap();
    let (a, b) = (run(), run());
    assert_eq!(a.best_graph6, b.best_graph6);
    assert_eq!(a.best_rho, b.best_rho);
    assert_eq!((a.graphs_scanned, a.minor_free_count, a.evaluated), (b.graphs_scanned, b.minor_free_count, b.evaluated));
}

#[test]
fn k22_small_orders_match_construction() {
    // K_{2,2}-minor-free graphs are forests of triangles and edges hung
    // together; the friendship-like G* should win at these orders
    for n in [5, 7] {
        let r = brute_force_extremal(n, st(2, 2), al(0.5), SearchOptions::default()).unwrap();
        let g = extremal_gstar(n, st(2, 2)).unwrap();
        assert!(r.construction_rho.is_some());
        assert_eq!(r.matches_construction, is_isomorphic(&r.best_graph, &g));
    }
}

#[test]
fn edge_maximal_exhaustive() {
    for (t, s) in [(4, 2), (5, 2), (5, 3)] {
        let r = verify_lemma212(t, s).unwrap();
        assert!(r.passed(), "t={t} s={s}: {:?}", r.counterexamples);
    }
}

#[test]
fn two_extra_vertices_exhaustive() {
    for (t, s) in [(4, 2), (5, 2), (5, 3)] {
        let r = verify_lemma215(t, s).unwrap();
        assert!(r.passed(), "t={t} s={s}: {r:?}");
    }
    let h = h_abc(0, 2, 2).unwrap().complement();
    assert_eq!(h.edge_count(), 12);
    assert!(h.is_connected() && has_st_property(&h, st(2, 5)));
}

#[test]
fn majorization_maximality_of_blocks() {
    let g = extremal_gstar(22, st(2, 5)).unwrap();
    let r = verify_degree_majorization_maximality(&g, VertexSet::range(1), 2, 5, 6).unwrap();
    assert!(r.majorization_ok() && r.edges_ok());
    assert!(r.parts.iter().any(|p| p.order == 6 && p.edges == 11 && p.same_edge_alternatives > 0));
    let g = extremal_gstar(13, st(2, 4)).unwrap();
    let r = verify_degree_majorization_maximality(&g, VertexSet::range(1), 2, 4, 7).unwrap();
    assert!(r.majorization_ok());
    // a single leftover vertex has nothing to compare against
    let g = f_st(6, st(2, 4)).unwrap();
    let r = verify_local_edge_maximality(&g, VertexSet::range(1), 2, 4, 1).unwrap();
    assert!(r.parts.iter().all(|p| p.order == 1 && p.edges == 0 && p.best_alternative == 0));
}

#[test]
fn structure_over_constructions() {
    for t in 2..=8 {
        for s in 2..=t {
            for n in 1..=64 {
                let Ok(g) = extremal_gstar(n, st(s, t)) else { continue };
                let r = verify_structure(&g, s, t).unwrap();
                assert!(r.passed(), "n={n} s={s} t={t}: {r:?}");
                assert_eq!(r.census.total(), g.components_within(g.vertices().difference(r.clique).mask()).len());
            }
        }
    }
}
