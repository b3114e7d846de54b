use kst_core::constructions::{extremal_gstar, h_st_complement, petersen_complement, StParams};
use kst_core::minor::*;
use kst_core::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Tries every assignment of host vertices to pattern vertices or "unused".
fn brute_force_minor(host: &Graph, pattern: &Graph) -> bool {
    let n = host.order();
    let k = pattern.order();
    let mut label = vec![0usize; n];
    loop {
        let mut sets = vec![0u64; k];
        for (v, &l) in label.iter().enumerate() {
            if l > 0 {
                sets[l - 1] |= 1 << v;
            }
        }
        let ok = sets.iter().all(|&s| host.is_connected_set(s))
            && pattern.edges().all(|(i, j)| {
                sets[i] != 0
                    && kst_core::graph::Bits(sets[i]).any(|v| host.neighbors(v) & sets[j] != 0)
            });
        if ok {
            return true;
        }
        let mut i = 0;
        while i < n && label[i] == k {
            label[i] = 0;
            i += 1;
        }
        if i == n {
            return false;
        }
        label[i] += 1;
    }
}

/// Independent subgraph search: injective maps of pattern vertices.
fn has_subgraph(host: &Graph, pattern: &Graph) -> bool {
    fn go(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == pattern.order() {
            return true;
        }
        for v in 0..host.order() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| !pattern.has_edge(i, j) || host.has_edge(v, map[j])) {
                map.push(v);
                if go(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(host, pattern, &mut Vec::new())
}

#[test]
fn generic_search_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let patterns = [
        Graph::complete_bipartite(2, 2).unwrap(),
        Graph::complete_bipartite(1, 3).unwrap(),
        Graph::complete_bipartite(2, 3).unwrap(),
        Graph::complete(4).unwrap(),
        Graph::path(4).unwrap(),
        Graph::cycle(5).unwrap(),
    ];
    for _ in 0..120 {
        let n = rng.random_range(4..=7);
        let p = rng.random_range(0.2..0.8);
        let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|_| rng.random_bool(p)).collect();
        let host = Graph::from_edges(n, &edges).unwrap();
        for pat in &patterns {
            let got = has_minor(&host, pat).unwrap();
            assert_eq!(got.is_some(), brute_force_minor(&host, pat), "{host:?} / {pat:?}");
            if let Some(w) = got {
                w.validate(&host, pat).unwrap();
            }
        }
    }
}

#[test]
fn witness_soundness_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut found = 0;
    for _ in 0..1000 {
        let n = rng.random_range(1..=10);
        let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|_| rng.random_bool(0.45)).collect();
        let host = Graph::from_edges(n, &edges).unwrap();
        let k = rng.random_range(1..=5);
        let pedges: Vec<_> = (0..k).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|_| rng.random_bool(0.5)).collect();
        let pat = Graph::from_edges(k, &pedges).unwrap();
        if let Some(w) = has_minor(&host, &pat).unwrap() {
            w.validate(&host, &pat).unwrap();
            found += 1;
        }
    }
    assert!(found > 100);
}

#[test]
fn gstar_reduction_consistency() {
    for t in 2..=8 {
        for s in 2..=t {
            for n in 1..=14 {
                let p = StParams::new(s, t).unwrap();
                let Ok(g) = extremal_gstar(n, p) else { continue };
                assert!(is_kst_minor_free(&g, s, t), "n={n} s={s} t={t}");
                let r = verify_lemma210(&g, s, t).unwrap();
                assert!(r.passed() && r.minor_free, "n={n} s={s} t={t}");
            }
        }
    }
}

#[test]
fn planted_clique_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut free = 0;
    for _ in 0..50 {
        let t = rng.random_range(3..=6);
        let s = rng.random_range(2..=3.min(t));
        let m = rng.random_range(t.min(8)..=(13 - s + 1));
        let edges: Vec<_> = (0..m).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|_| rng.random_bool(0.35)).collect();
        let rest = Graph::from_edges(m, &edges).unwrap();
        let g = Graph::complete(s - 1).unwrap().join(&rest).unwrap();
        let r = verify_lemma210(&g, s, t).unwrap();
        assert!(r.passed(), "{g:?} s={s} t={t}");
        free += r.minor_free as usize;
    }
    assert!(free > 0 && free < 50);
}

#[test]
fn property_examples() {
    assert!(has_st_property(&h_st_complement(StParams::new(2, 5).unwrap()).unwrap(), StParams::new(2, 5).unwrap()));
    for s in 2..=8 {
        let p = StParams::new(s, 8).unwrap();
        assert!(has_st_property(&petersen_complement(), p));
        assert!(has_st_property_generic(&petersen_complement(), p).unwrap());
    }
    for (s, t) in [(2, 3), (3, 5), (4, 7)] {
        let p = StParams::new(s, t).unwrap();
        assert!(!has_st_property(&Graph::complete(t + 1).unwrap(), p));
    }
}

#[test]
fn complement_components_exhaustive() {
    for t in [4, 5] {
        let r = verify_lemma211(t, 2).unwrap();
        assert_eq!(r.labeled_graphs, 1 << ((t + 1) * t / 2));
        assert!(r.passed(), "{:?}", r.counterexamples);
    }
}

#[test]
fn star_minor_edge_bound_pairs() {
    for (t, n) in [(3, 6), (4, 7)] {
        let r = verify_lemma24(t, n).unwrap();
        assert!(r.passed());
        let last = r.rows.last().unwrap();
        assert_eq!(last.bound, t * (t - 1) / 2 + n - t);
        assert_eq!(last.max_edges, last.bound);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn engines_agree(g in graph_strategy(9), a in 1usize..=3, b in 1usize..=4) {
        let generic = has_minor(&g, &Graph::complete_bipartite(a, b).unwrap()).unwrap();
        let fast = find_kab_minor(&g, a, b);
        prop_assert_eq!(generic.is_some(), fast.is_some());
        if let Some(w) = fast {
            prop_assert!(w.validate(&g, &Graph::complete_bipartite(a, b).unwrap()).is_ok());
        }
    }

    #[test]
    fn symmetric_pattern(g in graph_strategy(9), a in 1usize..=3, b in 1usize..=4) {
        prop_assert_eq!(
            has_minor(&g, &Graph::complete_bipartite(a, b).unwrap()).unwrap().is_some(),
            has_minor(&g, &Graph::complete_bipartite(b, a).unwrap()).unwrap().is_some()
        );
    }

    #[test]
    fn minor_monotone(g in graph_strategy(8), pick in any::<prop::sample::Index>()) {
        let pat = Graph::complete_bipartite(2, 3).unwrap();
        let has = has_minor(&g, &pat).unwrap().is_some();
        let non: Vec<_> = g.non_edges().collect();
        if !non.is_empty() {
            let (u, v) = non[pick.index(non.len())];
            if has {
                prop_assert!(has_minor(&g.add_edge(u, v).unwrap(), &pat).unwrap().is_some());
            }
        }
        let edges: Vec<_> = g.edges().collect();
        if !edges.is_empty() && !has {
            let (u, v) = edges[pick.index(edges.len())];
            prop_assert!(has_minor(&g.delete_edge(u, v).unwrap(), &pat).unwrap().is_none());
        }
    }

    #[test]
    fn subgraph_implies_minor(g in graph_strategy(7)) {
        for pat in [Graph::cycle(4).unwrap(), Graph::complete(4).unwrap(), Graph::complete_bipartite(1, 3).unwrap()] {
            if has_subgraph(&g, &pat) {
                prop_assert!(has_minor(&g, &pat).unwrap().is_some());
            }
        }
    }
}
