use proptest::prelude::*;

use tdc_core::baseline::{chromatic_number, total_domination_number};
use tdc_core::canon::{canonical_code, is_isomorphic};
use tdc_core::coloring::{is_proper, is_td_coloring};
use tdc_core::graph6::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use tdc_core::ops::{cartesian_product, neighbourhood_corona, r_gluing};
use tdc_core::perturbation::{stability, DegenerateConvention};
use tdc_core::solver::tdc_number;
use tdc_core::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| *e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn defined(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("TDC-number defined", |g| !g.has_isolated_vertex())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn witness_is_an_optimal_size_td_coloring(g in defined(9)) {
        let r = tdc_number(&g).unwrap();
        prop_assert!(is_td_coloring(&g, &r.witness).unwrap());
        prop_assert_eq!(r.witness.num_classes(), r.value);
    }

    #[test]
    fn henning_sandwich(g in defined(9)) {
        let t = tdc_number(&g).unwrap().value;
        let gt = total_domination_number(&g).unwrap().value;
        let chi = chromatic_number(&g).unwrap().value;
        prop_assert!(gt <= t && t <= gt + chi);
        prop_assert!(chi <= t);
    }

    #[test]
    fn invariants_survive_relabeling((g, perm) in defined(8).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), permutation(n))
    })) {
        let h = g.relabel(&perm);
        prop_assert_eq!(tdc_number(&g).unwrap().value, tdc_number(&h).unwrap().value);
        prop_assert_eq!(chromatic_number(&g).unwrap().value, chromatic_number(&h).unwrap().value);
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn chromatic_witness_is_proper(g in graph(9)) {
        let c = chromatic_number(&g).unwrap();
        prop_assert!(is_proper(&g, &c.witness).unwrap());
        prop_assert!(c.value >= g.clique_number().min(g.order()));
    }

    #[test]
    fn serialization_round_trips(g in graph(12)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(10)) {
        let c = g.complement();
        prop_assert_eq!(g.size() + c.size(), g.order() * (g.order() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn corona_and_product_sizes(g1 in graph(5), g2 in graph(5)) {
        let (n1, m1, n2, m2) = (g1.order(), g1.size(), g2.order(), g2.size());
        let c = neighbourhood_corona(&g1, &g2).unwrap();
        prop_assert_eq!(c.order(), n1 * (1 + n2));
        prop_assert_eq!(c.size(), m1 + n1 * m2 + 2 * m1 * n2);
        let p = cartesian_product(&g1, &g2).unwrap();
        prop_assert_eq!(p.order(), n1 * n2);
        prop_assert_eq!(p.size(), n1 * m2 + n2 * m1);
    }

    #[test]
    fn vertex_gluing_counts(g1 in graph(6), g2 in graph(6), a in 0usize..6, b in 0usize..6) {
        let (a, b) = (a % g1.order(), b % g2.order());
        let glued = r_gluing(&g1, &g2, &[a], &[b]).unwrap();
        prop_assert_eq!(glued.order(), g1.order() + g2.order() - 1);
        prop_assert_eq!(glued.size(), g1.size() + g2.size());
    }

    #[test]
    fn deletions_shrink(g in defined(8), v in 0usize..8) {
        let v = v % g.order();
        let h = g.delete_vertices(&[v]).unwrap();
        prop_assert_eq!(h.order(), g.order() - 1);
        prop_assert_eq!(h.size(), g.size() - g.degree(v));
        if let Some(e) = g.edges().next() {
            prop_assert_eq!(g.delete_edges(&[e]).unwrap().size(), g.size() - 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn stability_witness_changes_the_value(g in defined(7)) {
        let r = stability(&g, DegenerateConvention::UndefinedCountsAsChanged).unwrap();
        let value = r.value.unwrap();
        let w = r.witness.unwrap();
        prop_assert_eq!(w.len(), value);
        let after = w.apply(&g).unwrap();
        let changed = after.is_empty()
            || after.has_isolated_vertex()
            || tdc_number(&after).unwrap().value != r.base_value;
        prop_assert!(changed);
    }
}
