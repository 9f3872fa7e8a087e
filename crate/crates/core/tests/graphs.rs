use prodap_core::elimination::theorem1_selection;
use prodap_core::graph::{
    build_graph, find_shortest_even_cycle, verify_acyclicity_argument, BipartiteMultigraph,
    EvenCycle,
};
use prodap_core::progression::{longest_ap_in_set, product_set};
use proptest::prelude::*;

/// Girth by depth-first enumeration of every simple cycle; parallel edges
/// count as a cycle of length two.
fn girth_oracle(g: &BipartiteMultigraph) -> Option<usize> {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    fn dfs(
        adj: &[Vec<(usize, usize)>],
        start: usize,
        u: usize,
        used_edges: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        best: &mut Option<usize>,
    ) {
        for &(v, e) in &adj[u] {
            if used_edges.contains(&e) {
                continue;
            }
            if v == start && !used_edges.is_empty() {
                let len = used_edges.len() + 1;
                if best.is_none_or(|b| len < b) {
                    *best = Some(len);
                }
                continue;
            }
            if on_path[v] || v < start {
                continue;
            }
            on_path[v] = true;
            used_edges.push(e);
            dfs(adj, start, v, used_edges, on_path, best);
            used_edges.pop();
            on_path[v] = false;
        }
    }
    for s in 0..n {
        let mut on_path = vec![false; n];
        on_path[s] = true;
        dfs(&adj, s, s, &mut Vec::new(), &mut on_path, &mut best);
    }
    best
}

fn assert_simple_cycle(g: &BipartiteMultigraph, c: &EvenCycle) {
    let k = c.len();
    assert_eq!(c.vertices.len(), k);
    let mut vs = c.vertices.clone();
    vs.sort_unstable();
    vs.dedup();
    assert_eq!(vs.len(), k, "vertices repeat in {c:?}");
    let mut es = c.edges.clone();
    es.sort_unstable();
    es.dedup();
    assert_eq!(es.len(), k, "edges repeat in {c:?}");
    for i in 0..k {
        let (a, b) = g.endpoints(c.edges[i]);
        let (x, y) = (c.vertices[i], c.vertices[(i + 1) % k]);
        assert!((a, b) == (x, y) || (a, b) == (y, x), "edge {i} of {c:?}");
    }
}

fn graph_strategy() -> impl Strategy<Value = BipartiteMultigraph> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(l, r)| {
        prop::collection::vec((0..l, 0..r), 0..=14)
            .prop_map(move |edges| BipartiteMultigraph::new(l, r, edges).unwrap())
    })
}

fn check_against_oracle(g: &BipartiteMultigraph) {
    let girth = girth_oracle(g);
    for max_len in [4usize, 6, 8, 12] {
        let found = g.shortest_even_cycle(max_len).unwrap();
        let expected = girth.filter(|&len| len <= max_len);
        assert_eq!(
            found.as_ref().map(EvenCycle::len),
            expected,
            "max_len {max_len} on {g:?}"
        );
        if let Some(c) = &found {
            assert_simple_cycle(g, c);
        }
    }
    assert_eq!(g.is_forest(), girth.is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn detector_matches_exhaustive_search(g in graph_strategy()) {
        check_against_oracle(&g);
    }

    #[test]
    fn containment_graphs_match_exhaustive_search(
        base in prop::collection::btree_set(1u128..60, 1..=6),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..12),
    ) {
        let b: Vec<u128> = base.into_iter().collect();
        let ps = product_set(&b.iter().map(|&x| x as u64).collect::<Vec<_>>()).unwrap();
        let elems = ps.elements();
        let mut a: Vec<u128> = picks.iter().map(|ix| elems[ix.index(elems.len())]).collect();
        a.sort_unstable();
        a.dedup();
        let mut corpus = vec![a];
        let ap = longest_ap_in_set(elems).unwrap();
        corpus.push(ap.terms().collect());
        for a in corpus {
            let g = build_graph(&a, &b).unwrap();
            prop_assert_eq!(g.edge_count(), a.len());
            prop_assert_eq!(g.vertex_count(), 2 * b.len());
            prop_assert!(g.accounting_holds());
            for e in g.edges() {
                prop_assert_eq!(e.b1 * e.b2, *e.label);
                prop_assert!(e.b1 <= e.b2);
            }
            check_against_oracle(g.graph());
            if let Some(c) = find_shortest_even_cycle(&g, 12).unwrap() {
                prop_assert!(g.cycle_labels_balance(&c));
            }
        }
    }

    #[test]
    fn unique_divisor_selections_give_forests(
        r in 1u64..200,
        d in 1u64..200,
        len in 10u64..80,
        scale in 1u64..30,
        splits in prop::collection::vec(any::<prop::sample::Index>(), 80),
    ) {
        prop_assume!(num_integer::gcd(r, d) == 1);
        let sel = theorem1_selection(r, d, len).unwrap();
        // any factorization of each scaled term into two elements of B
        let mut base = Vec::new();
        for (pair, ix) in sel.pairs.iter().zip(&splits) {
            let t = pair.term as u64 * scale;
            let divisors: Vec<u64> = (1..=t).filter(|x| t.is_multiple_of(*x)).collect();
            let x = divisors[ix.index(divisors.len())];
            base.push(x);
            base.push(t / x);
        }
        let verdict = verify_acyclicity_argument(&sel, scale, &base).unwrap();
        prop_assert!(verdict.is_forest(), "{verdict:?}");
    }
}

#[test]
fn products_of_four_primes_close_a_square() {
    // 10·21 = 15·14 gives the cycle L2 R5 L3 R7
    let b = [2u128, 3, 5, 7];
    let a = [6u128, 10, 15, 21, 35, 14];
    let g = build_graph(&a, &b).unwrap();
    check_against_oracle(g.graph());
    let c = find_shortest_even_cycle(&g, 12).unwrap().unwrap();
    assert_eq!(c.len(), 4);
    assert!(g.cycle_labels_balance(&c));
}
