mod common;

use egsolve_core::gen::{gen_complete, gen_random};
use egsolve_core::reductions::{
    brute_force_neg_triangle, has_negative_triangle_via_apnp, neg_triangle_to_apnp,
};
use egsolve_core::Digraph;
use proptest::prelude::*;

fn without_self_loops(g: &Digraph) -> Digraph {
    let edges: Vec<(usize, usize, i64)> = g
        .edges()
        .iter()
        .filter(|e| e.from != e.to)
        .map(|e| (e.from, e.to, e.weight))
        .collect();
    Digraph::from_list(g.n(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn detector_matches_triple_scan_on_complete_graphs(
        n in 3usize..7, w in 1i64..11, seed: u64,
    ) {
        let g = gen_complete(n, w, seed).unwrap();
        prop_assert_eq!(
            has_negative_triangle_via_apnp(g.digraph()).unwrap(),
            brute_force_neg_triangle(g.digraph())
        );
    }

    #[test]
    fn detector_matches_triple_scan_on_sparse_graphs(
        n in 1usize..7, extra in 0usize..10, w in 1i64..5, seed: u64,
    ) {
        let g = without_self_loops(gen_random(n, n + extra, w, 0.5, seed).unwrap().digraph());
        prop_assert_eq!(
            has_negative_triangle_via_apnp(&g).unwrap(),
            brute_force_neg_triangle(&g)
        );
    }

    #[test]
    fn layering_is_an_isolated_translation(
        n in 1usize..6, extra in 0usize..8, seed: u64,
    ) {
        let g = without_self_loops(gen_random(n, n + extra, 3, 0.5, seed).unwrap().digraph());
        let (layered, queries) = neg_triangle_to_apnp(&g).unwrap();
        prop_assert_eq!(layered.n(), 5 * n);
        prop_assert_eq!(layered.edge_count(), 3 * g.edge_count() + n);
        prop_assert_eq!(queries.len(), n);
        // layer boundaries: every edge advances exactly one layer
        for e in layered.edges() {
            prop_assert_eq!(e.to / n, e.from / n + 1);
        }
    }
}
