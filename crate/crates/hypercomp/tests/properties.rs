use std::collections::BTreeSet;

use proptest::prelude::*;

use hypercomp::{
    construct_auto, emit_digraph, emit_hypergraph, exact_hk, exact_hk_with, parse_digraph,
    parse_hypergraph, verify_witness, ExactOptions, Hypergraph,
};

/// A random hypergraph on up to `max_v` named vertices with up to
/// `max_e` edges of size 2..=4.
fn arb_hypergraph(max_v: usize, max_e: usize) -> impl Strategy<Value = Hypergraph> {
    let vertex = 0..max_v;
    let edge = prop::collection::btree_set(vertex, 2..=4usize.min(max_v));
    (2..=max_v, prop::collection::vec(edge, 0..=max_e)).prop_map(|(n, edges)| {
        let mut h = Hypergraph::new();
        for i in 0..n {
            h.ensure_vertex(&format!("v{i}"));
        }
        for e in edges {
            let members: Vec<String> = e
                .into_iter()
                .filter(|&v| v < n)
                .map(|v| format!("v{v}"))
                .collect();
            if members.len() >= 2 {
                let refs: Vec<&str> = members.iter().map(String::as_str).collect();
                h.add_edge(&refs).unwrap();
            }
        }
        h
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn handshake(h in arb_hypergraph(8, 6)) {
        let degree_sum: usize = (0..h.vertex_count()).map(|v| h.degree_of(v)).sum();
        let size_sum: usize = h.edges().iter().map(|e| e.len()).sum();
        prop_assert_eq!(degree_sum, size_sum);
    }

    #[test]
    fn components_partition_vertices(h in arb_hypergraph(8, 6)) {
        let comps = h.connected_components();
        let mut seen = BTreeSet::new();
        for c in &comps {
            for &v in c {
                prop_assert!(seen.insert(v), "vertex in two components");
            }
        }
        prop_assert_eq!(seen.len(), h.vertex_count());
    }

    #[test]
    fn hypergraph_parse_emit_roundtrip(h in arb_hypergraph(8, 6)) {
        let text = emit_hypergraph(&h);
        let reparsed = parse_hypergraph(&text).unwrap();
        prop_assert_eq!(emit_hypergraph(&reparsed), text);
        prop_assert_eq!(reparsed.vertex_count(), h.vertex_count());
        prop_assert_eq!(reparsed.edge_count(), h.edge_count());
    }

    #[test]
    fn berge_criterion_matches_bruteforce(h in arb_hypergraph(6, 4)) {
        let cycle = h.find_cycle_bruteforce().unwrap();
        prop_assert_eq!(h.has_no_cycle(), cycle.is_none());
    }

    #[test]
    fn construct_auto_is_always_verified(h in arb_hypergraph(7, 5)) {
        let w = construct_auto(&h);
        prop_assert!(verify_witness(&w).ok());
    }

    #[test]
    fn exact_within_bounds(h in arb_hypergraph(5, 4)) {
        let res = exact_hk(&h);
        prop_assert!(verify_witness(&res.witness).ok());
        prop_assert_eq!(res.witness.added.len(), res.hk);
        let lb = hypercomp::best_lower_bound(&h).best;
        let ub = construct_auto(&h).added.len();
        prop_assert!(lb <= res.hk && res.hk <= ub, "lb={} hk={} ub={}", lb, res.hk, ub);
    }

    #[test]
    fn exact_thread_counts_agree(h in arb_hypergraph(5, 4)) {
        let base = exact_hk(&h);
        for threads in [2, 3, 4] {
            let res = exact_hk_with(&h, &ExactOptions { threads, ..ExactOptions::default() });
            prop_assert_eq!(res.hk, base.hk);
            prop_assert_eq!(res.status, base.status);
            prop_assert_eq!(res.nodes_explored, base.nodes_explored);
            prop_assert_eq!(emit_digraph(&res.witness.digraph), emit_digraph(&base.witness.digraph));
        }
    }

    #[test]
    fn isolated_vertices_shift_exact_value(h in arb_hypergraph(5, 3)) {
        let hk = exact_hk(&h).hk;
        let mut padded = h.clone();
        padded.ensure_vertex("iso0");
        padded.ensure_vertex("iso1");
        let expected = hk.saturating_sub(2);
        prop_assert_eq!(exact_hk(&padded).hk, expected);
    }

    #[test]
    fn digraph_parse_emit_roundtrip(arcs in prop::collection::btree_set((0..6usize, 0..6usize), 0..10)) {
        let mut d = hypercomp::Digraph::new();
        for i in 0..6 {
            d.ensure_vertex(&format!("v{i}"));
        }
        for (a, b) in arcs {
            if a != b {
                d.add_arc(&format!("v{a}"), &format!("v{b}")).unwrap();
            }
        }
        let text = emit_digraph(&d);
        let reparsed = parse_digraph(&text).unwrap();
        prop_assert_eq!(emit_digraph(&reparsed), text);
    }
}
