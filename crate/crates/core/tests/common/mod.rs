//! Naive reference implementations the property tests compare against.
//! Everything here is a direct search over an explicit state space, kept
//! structurally distant from the algorithms under test.

#![allow(dead_code)]

use egsolve_core::finite::PositionalStrategy;
use egsolve_core::{Digraph, GameGraph, Owner, ReachMatrix};

/// Plain forward BFS.
pub fn forward_reachable(g: &Digraph, start: usize) -> Vec<bool> {
    let out = g.out_edge_ids();
    let mut seen = vec![false; g.n()];
    let mut queue = vec![start];
    seen[start] = true;
    while let Some(v) = queue.pop() {
        for &eid in &out[v] {
            let to = g.edges()[eid].to;
            if !seen[to] {
                seen[to] = true;
                queue.push(to);
            }
        }
    }
    seen
}

pub fn pairwise_reachable(g: &Digraph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|v| forward_reachable(g, v)).collect()
}

/// Reachability along walks of at least one edge whose running weight sum
/// stays nonnegative and ends at zero, for graphs with weights in
/// `{-1, +1}`. Searches the explicit (vertex, height) state space with
/// heights capped at `cap`.
pub fn dyck_state_oracle(g: &Digraph, cap: usize) -> ReachMatrix {
    let n = g.n();
    let out = g.out_edge_ids();
    let mut result = ReachMatrix::new(n);
    let mut seen = vec![false; n * (cap + 1)];
    let mut stack = Vec::new();
    for s in 0..n {
        seen.iter_mut().for_each(|b| *b = false);
        seen[s * (cap + 1)] = true;
        stack.push((s, 0usize));
        while let Some((v, h)) = stack.pop() {
            for &eid in &out[v] {
                let e = g.edges()[eid];
                let nh = match e.weight {
                    1 => h + 1,
                    -1 => {
                        if h == 0 {
                            continue;
                        }
                        h - 1
                    }
                    w => panic!("oracle expects unit weights, got {w}"),
                };
                if nh > cap {
                    continue;
                }
                if nh == 0 {
                    result.set(s, e.to);
                }
                let key = e.to * (cap + 1) + nh;
                if !seen[key] {
                    seen[key] = true;
                    stack.push((e.to, nh));
                }
            }
        }
    }
    result
}

/// [`dyck_state_oracle`] at a generous cap, re-run at double the cap to
/// confirm the bound did not truncate anything.
pub fn dyck_state_oracle_checked(g: &Digraph) -> ReachMatrix {
    let cap = 2 * g.n() * g.n() + 2;
    let first = dyck_state_oracle(g, cap);
    let second = dyck_state_oracle(g, 2 * cap + 3);
    assert_eq!(first, second, "state oracle cap was too small");
    first
}

/// Minimal initial credit to survive `rounds` moves from each vertex,
/// found by a boolean game search over (vertex, credit, moves left) rather
/// than any numeric recurrence.
pub fn min_credit_oracle(g: &GameGraph, rounds: usize) -> Vec<i64> {
    let n = g.n();
    let w = g.max_weight();
    let top = (rounds as i64) * w;
    let credits = (top + 1) as usize;
    let out = g.digraph().out_edge_ids();

    // survives[s][v * credits + c]: with c credit and s moves to go
    let mut survives = vec![vec![false; n * credits.max(1)]; rounds + 1];
    if credits > 0 {
        survives[0].iter_mut().for_each(|b| *b = true);
    }
    for s in 1..=rounds {
        for v in 0..n {
            for c in 0..credits as i64 {
                let decide = |eid: &usize| {
                    let e = g.edges()[*eid];
                    let nc = c + e.weight;
                    nc >= 0 && survives[s - 1][e.to * credits + nc.min(top) as usize]
                };
                let ok = match g.owner(v) {
                    Owner::Alice => out[v].iter().any(decide),
                    Owner::Bob => out[v].iter().all(decide),
                };
                survives[s][v * credits + c as usize] = ok;
            }
        }
    }
    (0..n)
        .map(|v| {
            (0..credits as i64)
                .find(|&c| survives[rounds][v * credits + c as usize])
                .expect("credit rounds*W always survives")
        })
        .collect()
}

/// Deepest dip reachable from `start` along simple paths: the energy a
/// maximiser in full control can demand when no negative cycle exists.
pub fn max_debt_simple_paths(g: &Digraph, start: usize) -> i64 {
    fn dfs(g: &Digraph, out: &[Vec<usize>], v: usize, sum: i64, on_path: &mut [bool]) -> i64 {
        let mut worst = sum;
        on_path[v] = true;
        for &eid in &out[v] {
            let e = g.edges()[eid];
            if !on_path[e.to] {
                worst = worst.min(dfs(g, out, e.to, sum + e.weight, on_path));
            }
        }
        on_path[v] = false;
        worst
    }
    let out = g.out_edge_ids();
    let mut on_path = vec![false; g.n()];
    let deepest = dfs(g, &out, start, 0, &mut on_path);
    (-deepest).max(0)
}

/// Calls `f` with every positional strategy of `owner`, or panics if the
/// strategy space exceeds `limit`.
pub fn each_strategy<F: FnMut(&PositionalStrategy)>(
    g: &GameGraph,
    owner: Owner,
    limit: u64,
    mut f: F,
) {
    let out = g.digraph().out_edge_ids();
    let owned: Vec<usize> = (0..g.n()).filter(|&v| g.owner(v) == owner).collect();
    let mut count: u128 = 1;
    for &v in &owned {
        assert!(!out[v].is_empty(), "vertex {v} has no outgoing edge");
        count = count.saturating_mul(out[v].len() as u128);
    }
    assert!(count <= limit as u128, "strategy space too large: {count}");

    let mut idx = vec![0usize; owned.len()];
    loop {
        let mut choice = vec![None; g.n()];
        for (i, &v) in owned.iter().enumerate() {
            choice[v] = Some(out[v][idx[i]]);
        }
        let s = PositionalStrategy::new(g, owner, choice).expect("valid by construction");
        f(&s);
        let mut i = 0;
        loop {
            if i == owned.len() {
                return;
            }
            idx[i] += 1;
            if idx[i] < out[owned[i]].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Strategy space size for `owner`, saturating.
pub fn strategy_count(g: &GameGraph, owner: Owner) -> u128 {
    let out = g.digraph().out_degrees();
    (0..g.n())
        .filter(|&v| g.owner(v) == owner)
        .fold(1u128, |acc, v| acc.saturating_mul(out[v].max(1) as u128))
}
