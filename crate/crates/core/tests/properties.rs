use proptest::prelude::*;

use sepcodes_core::format::{
    parse_graph, parse_hypergraph, parse_test_cover, write_graph, write_hypergraph,
    write_test_cover,
};
use sepcodes_core::reductions::TestCoverInstance;
use sepcodes_core::separation::{is_kind_set, number, number_bruteforce, separation_hypergraph};
use sepcodes_core::{Graph, Hypergraph, Kind, SeparationKind, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_hypergraph(
    max_n: usize,
    max_edge: usize,
    max_edges: usize,
) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(
            proptest::collection::btree_set(0..n, 1..=max_edge.min(n)),
            0..max_edges,
        )
        .prop_map(move |es| {
            Hypergraph::new(n, es.into_iter().map(|e| e.into_iter().collect()).collect()).unwrap()
        })
    })
}

fn arb_test_cover() -> impl Strategy<Value = TestCoverInstance> {
    (1usize..8, 0usize..4).prop_flat_map(|(items, budget)| {
        proptest::collection::vec(proptest::collection::btree_set(0..items, 0..=items), 0..6)
            .prop_map(move |ts| {
                TestCoverInstance::new(
                    items,
                    ts.into_iter().map(|t| t.into_iter().collect()).collect(),
                    budget,
                )
                .unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_matches_enumeration_on_wide_hypergraphs(h in arb_hypergraph(20, 8, 40)) {
        let fast = h.covering_number();
        prop_assert_eq!(&fast, &h.covering_number_bruteforce().unwrap());
        let any = h.any_minimum_cover();
        prop_assert_eq!(any.tau, fast.tau);
        if let Some(w) = any.witness {
            prop_assert!(h.is_cover(&w));
        }
    }

    #[test]
    fn decision_agrees_with_the_covering_number(h in arb_hypergraph(16, 6, 30), budget in 0usize..10) {
        let tau = h.covering_number().tau;
        prop_assert_eq!(h.has_cover_within(budget), tau.is_some_and(|t| t <= budget));
        if let Some(c) = h.cover_within(budget) {
            prop_assert!(h.is_cover(&c) && c.len() <= budget);
        }
    }

    #[test]
    fn every_kind_matches_enumeration(g in arb_graph(9)) {
        for kind in Kind::all() {
            let fast = number(&g, kind);
            prop_assert_eq!(&fast, &number_bruteforce(&g, kind).unwrap(), "{}", kind);
            if let Some(w) = &fast.witness {
                prop_assert!(is_kind_set(&g, kind, w));
            }
        }
    }

    #[test]
    fn complement_swaps_open_and_closed_separation(g in arb_graph(10)) {
        let co = g.complement();
        prop_assert_eq!(co.complement(), g.clone());
        use SeparationKind::*;
        for (s, t) in [(L, L), (I, O), (O, I), (F, F)] {
            prop_assert_eq!(separation_hypergraph(&g, s).clutter(), separation_hypergraph(&co, t).clutter());
        }
    }

    #[test]
    fn graph_format_round_trips(g in arb_graph(12)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn hypergraph_format_round_trips(h in arb_hypergraph(12, 5, 12)) {
        let back = parse_hypergraph(&write_hypergraph(&h)).unwrap();
        prop_assert_eq!(back.edge_set(), h.edge_set());
        prop_assert_eq!(back.n(), h.n());
    }

    #[test]
    fn test_cover_format_round_trips(inst in arb_test_cover()) {
        prop_assert_eq!(parse_test_cover(&write_test_cover(&inst)).unwrap(), inst);
    }

    #[test]
    fn parsers_never_panic(text in "[0-9 \\-#\n]{0,60}") {
        let _ = parse_graph(&text);
        let _ = parse_hypergraph(&text);
        let _ = parse_test_cover(&text);
    }
}

#[test]
fn empty_edge_makes_hypergraph_uncoverable() {
    let h = Hypergraph::new(3, vec![VertexSet::from([0]), VertexSet::new()]).unwrap();
    assert!(!h.covering_number().feasible);
    assert!(!h.any_minimum_cover().feasible);
    assert!(!h.has_cover_within(3));
}
