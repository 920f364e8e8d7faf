//! Solver for games in which every vertex belongs to Bob.
//!
//! Bob controls every move, so a vertex needs unbounded energy exactly when
//! Bob can steer the play onto a negative cycle. Those vertices are found by
//! checking each strongly connected component for a negative cycle and
//! closing the result under reachability. On the remaining vertices Bob
//! maximises the total drop along a simple path, which reduces to shortest
//! paths toward an auxiliary sink.

use crate::energy::{Energy, EnergyFunction};
use crate::error::{Error, Result};
use crate::graph::{ensure_all_owned, ensure_playable, reachable_to, Digraph, Edge, GameGraph, Owner};
use crate::scc::scc;
use crate::sssp::bellman_ford;

/// Mask of vertices from which Bob can force the energy demand above every
/// bound, i.e. from which a negative cycle is reachable.
pub fn infinite_energy_set(g: &GameGraph) -> Result<Vec<bool>> {
    ensure_all_owned(g, Owner::Bob)?;
    let dg = g.digraph();
    let dec = scc(dg);

    let mut comp_edges: Vec<Vec<&Edge>> = vec![Vec::new(); dec.components.len()];
    for e in dg.edges() {
        let c = dec.comp_of[e.from];
        if c == dec.comp_of[e.to] {
            comp_edges[c].push(e);
        }
    }

    let mut local_id = vec![0usize; dg.n()];
    let mut seeds = Vec::new();
    for (c, members) in dec.components.iter().enumerate() {
        if comp_edges[c].is_empty() {
            continue;
        }
        for (i, &v) in members.iter().enumerate() {
            local_id[v] = i;
        }
        let edges = comp_edges[c]
            .iter()
            .map(|e| Edge::new(local_id[e.from], local_id[e.to], e.weight))
            .collect();
        let sub = Digraph::new(members.len(), edges)?;
        if bellman_ford(&sub, 0)?.negative_cycle().is_some() {
            seeds.extend_from_slice(members);
        }
    }
    Ok(reachable_to(dg, &seeds))
}

/// Exact energies for an all-Bob game.
///
/// The infinite part comes from [`infinite_energy_set`]. Elsewhere Bob plays
/// a highest-debt simple path, computed as shortest paths to a sink that
/// every finite vertex can enter at cost zero; the energy is the negated
/// distance, floored at zero.
pub fn solve_all_bob(g: &GameGraph) -> Result<EnergyFunction> {
    ensure_all_owned(g, Owner::Bob)?;
    ensure_playable(g)?;
    let infinite = infinite_energy_set(g)?;
    let n = g.n();

    let finite: Vec<usize> = (0..n).filter(|&v| !infinite[v]).collect();
    let mut result = EnergyFunction::all_infinite(n);
    if finite.is_empty() {
        return Ok(result);
    }

    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in finite.iter().enumerate() {
        new_id[v] = i;
    }
    let t = finite.len();
    let mut edges = Vec::new();
    for e in g.edges() {
        if !infinite[e.from] {
            // A finite vertex cannot have an edge into the infinite set:
            // reachability closure would have swallowed it.
            debug_assert!(!infinite[e.to]);
            edges.push(Edge::new(new_id[e.from], new_id[e.to], e.weight));
        }
    }
    for i in 0..finite.len() {
        edges.push(Edge::new(i, t, 0));
    }
    let h = Digraph::new(t + 1, edges)?;

    let outcome = bellman_ford(&h.reversed(), t)?;
    let sp = match outcome.shortest() {
        Some(sp) => sp,
        None => {
            return Err(Error::Internal(
                "negative cycle among vertices classified as finite".into(),
            ))
        }
    };
    for &v in &finite {
        match sp.dist(new_id[v]) {
            Some(d) => result.set(v, Energy::Finite((-d).max(0))),
            None => {
                return Err(Error::Internal(format!(
                    "vertex {} lost its zero-cost exit to the sink",
                    v + 1
                )))
            }
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GameGraph;

    fn all_bob(n: usize, edges: &[(usize, usize, i64)], w: i64) -> GameGraph {
        GameGraph::from_list(n, edges, &vec![Owner::Bob; n], w).unwrap()
    }

    #[test]
    fn negative_component_and_nothing_else() {
        // 0 <-> 1 carry a -1 cycle; 2 loops at zero with no cross edges.
        let g = all_bob(3, &[(0, 1, -1), (1, 0, 0), (2, 2, 0)], 1);
        assert_eq!(infinite_energy_set(&g).unwrap(), vec![true, true, false]);
    }

    #[test]
    fn reachability_pulls_in_upstream_vertices() {
        let g = all_bob(
            3,
            &[(2, 0, 3), (0, 1, -1), (1, 0, 0), (2, 2, 0)],
            3,
        );
        assert_eq!(infinite_energy_set(&g).unwrap(), vec![true, true, true]);
    }

    #[test]
    fn nonnegative_cycle_is_harmless() {
        let g = all_bob(2, &[(0, 1, -1), (1, 0, 1)], 1);
        assert_eq!(infinite_energy_set(&g).unwrap(), vec![false, false]);
    }

    #[test]
    fn rejects_alice_vertices() {
        let g = GameGraph::from_list(1, &[(0, 0, 0)], &[Owner::Alice], 1).unwrap();
        assert!(solve_all_bob(&g).is_err());
        assert!(infinite_energy_set(&g).is_err());
    }

    #[test]
    fn drop_then_rest() {
        let g = all_bob(2, &[(0, 1, -3), (1, 1, 0)], 3);
        let e = solve_all_bob(&g).unwrap();
        assert_eq!(e.get(0), Energy::Finite(3));
        assert_eq!(e.get(1), Energy::Finite(0));
    }

    #[test]
    fn solves_two_cycle() {
        let g = all_bob(2, &[(0, 1, -1), (1, 0, 1)], 1);
        let e = solve_all_bob(&g).unwrap();
        assert_eq!(e.get(0), Energy::Finite(1));
        assert_eq!(e.get(1), Energy::Finite(0));
    }

    #[test]
    fn bob_picks_the_worse_branch() {
        // From 0 Bob may rest at cost 0 or dive -5 before resting.
        let g = all_bob(
            3,
            &[(0, 1, 0), (0, 2, -5), (1, 1, 0), (2, 2, 0)],
            5,
        );
        let e = solve_all_bob(&g).unwrap();
        assert_eq!(e.get(0), Energy::Finite(5));
    }

    #[test]
    fn negative_loop_spreads_infinity() {
        let g = all_bob(2, &[(0, 1, 2), (1, 1, -1)], 2);
        let e = solve_all_bob(&g).unwrap();
        assert_eq!(e.get(0), Energy::Infinity);
        assert_eq!(e.get(1), Energy::Infinity);
    }

    #[test]
    fn debts_add_along_forced_paths() {
        let g = all_bob(3, &[(0, 1, -2), (1, 2, -2), (2, 2, 1)], 2);
        let e = solve_all_bob(&g).unwrap();
        assert_eq!(e.get(0), Energy::Finite(4));
        assert_eq!(e.get(1), Energy::Finite(2));
        assert_eq!(e.get(2), Energy::Finite(0));
    }
}
