mod common;

use egsolve_core::cycles::{cycle_weight, enumerate_simple_cycles};
use egsolve_core::gen::gen_random;
use egsolve_core::sssp::{bellman_ford, find_negative_cycle};
use egsolve_core::Digraph;
use proptest::prelude::*;

/// Minimum weight over simple paths from `s` to each vertex, by exhaustive
/// DFS. With no negative cycles this equals the shortest-walk distance.
fn simple_path_dists(g: &Digraph, s: usize) -> Vec<Option<i64>> {
    fn dfs(
        g: &Digraph,
        out: &[Vec<usize>],
        v: usize,
        sum: i64,
        on_path: &mut [bool],
        best: &mut [Option<i64>],
    ) {
        if best[v].map_or(true, |b| sum < b) {
            best[v] = Some(sum);
        }
        on_path[v] = true;
        for &eid in &out[v] {
            let e = g.edges()[eid];
            if !on_path[e.to] {
                dfs(g, out, e.to, sum + e.weight, on_path, best);
            }
        }
        on_path[v] = false;
    }
    let out = g.out_edge_ids();
    let mut best = vec![None; g.n()];
    let mut on_path = vec![false; g.n()];
    dfs(g, &out, s, 0, &mut on_path, &mut best);
    best
}

proptest! {
    #[test]
    fn negative_cycle_detection_matches_enumeration(
        n in 1usize..8, extra in 0usize..10, w in 1i64..4, seed: u64,
    ) {
        let g = gen_random(n, n + extra, w, 0.5, seed).unwrap();
        let dg = g.digraph();
        let enumerated = enumerate_simple_cycles(dg)
            .iter()
            .any(|c| cycle_weight(dg, c) < 0);
        prop_assert_eq!(find_negative_cycle(dg).is_some(), enumerated);
    }

    #[test]
    fn witness_cycles_are_closed_and_negative(
        n in 1usize..10, extra in 0usize..12, w in 1i64..5, seed: u64,
    ) {
        let g = gen_random(n, n + extra, w, 0.5, seed).unwrap();
        let dg = g.digraph();
        if let Some(c) = find_negative_cycle(dg) {
            prop_assert!(c.weight < 0);
            prop_assert_eq!(c.weight, cycle_weight(dg, &c.edges));
            let k = c.edges.len();
            prop_assert!(k > 0);
            for i in 0..k {
                let here = dg.edges()[c.edges[i]];
                let next = dg.edges()[c.edges[(i + 1) % k]];
                prop_assert_eq!(here.to, next.from);
            }
            prop_assert_eq!(c.vertices.len(), k);
        }
    }

    #[test]
    fn distances_match_simple_path_enumeration(
        n in 1usize..8, extra in 0usize..10, w in 1i64..4, seed: u64, s_raw in 0usize..8,
    ) {
        let g = gen_random(n, n + extra, w, 0.5, seed).unwrap();
        let dg = g.digraph();
        let s = s_raw % n;
        if let Some(sp) = bellman_ford(dg, s).unwrap().shortest() {
            let expected = simple_path_dists(dg, s);
            for v in 0..n {
                prop_assert_eq!(sp.dist(v), expected[v], "vertex {}", v);
            }
        }
    }

    #[test]
    fn parent_edges_reconstruct_the_distances(
        n in 1usize..10, extra in 0usize..12, w in 1i64..5, seed: u64,
    ) {
        let g = gen_random(n, n + extra, w, 0.5, seed).unwrap();
        let dg = g.digraph();
        if let Some(sp) = bellman_ford(dg, 0).unwrap().shortest() {
            for v in 0..n {
                match (sp.dist(v), sp.parent_edge(v)) {
                    (Some(d), Some(eid)) => {
                        let e = dg.edges()[eid];
                        prop_assert_eq!(e.to, v);
                        prop_assert_eq!(sp.dist(e.from).unwrap() + e.weight, d);
                    }
                    (Some(_), None) => prop_assert_eq!(v, 0),
                    (None, pe) => prop_assert!(pe.is_none()),
                }
            }
        }
    }
}
