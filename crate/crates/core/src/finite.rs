//! Approximation sweeps, the general fixpoint solver, and strategy tools.
//!
//! The core operator maps a candidate energy assignment `e` to its one-step
//! improvement: at an Alice vertex the cheapest outgoing move, at a Bob
//! vertex the most expensive one, floored at zero. Iterating from all zeros
//! yields a pointwise nondecreasing sequence whose limit is the exact energy
//! requirement. [`value_iteration`] runs a fixed number of sweeps,
//! [`solve_fixpoint`] runs until the sequence stabilises, declaring a vertex
//! unbounded once its value provably exceeds every finite requirement.

use crate::energy::{Energy, EnergyFunction};
use crate::error::{Error, Result};
use crate::graph::{ensure_playable, Digraph, GameGraph, Owner};
use crate::sssp::find_negative_cycle;

/// Cap on the number of joint strategies [`brute_force`] will examine.
pub const DEFAULT_STRATEGY_BUDGET: u64 = 1_000_000;

struct Csr {
    start: Vec<usize>,
    to: Vec<usize>,
    weight: Vec<i64>,
}

impl Csr {
    fn build(g: &Digraph) -> Csr {
        let n = g.n();
        let mut start = vec![0usize; n + 1];
        for e in g.edges() {
            start[e.from + 1] += 1;
        }
        for i in 0..n {
            start[i + 1] += start[i];
        }
        let mut pos = start.clone();
        let mut to = vec![0usize; g.edge_count()];
        let mut weight = vec![0i64; g.edge_count()];
        for e in g.edges() {
            to[pos[e.from]] = e.to;
            weight[pos[e.from]] = e.weight;
            pos[e.from] += 1;
        }
        Csr { start, to, weight }
    }
}

/// Runs `rounds` synchronous improvement sweeps from the all-zero start.
///
/// The result after `j` sweeps is the exact requirement for surviving `j`
/// moves. On graphs without negative cycles, `n` sweeps already give the
/// limit. Every vertex needs an outgoing edge.
pub fn value_iteration(g: &GameGraph, rounds: usize) -> Result<EnergyFunction> {
    ensure_playable(g)?;
    let bound = g.max_weight();
    if (rounds as i128) * (bound as i128) > (i64::MAX / 4) as i128 {
        return Err(Error::InvalidParameter(format!(
            "{} sweeps with weights up to {} overflow 64-bit energies",
            rounds, bound
        )));
    }
    let n = g.n();
    let csr = Csr::build(g.digraph());
    let minimizes: Vec<bool> = g.owners().iter().map(|&o| o == Owner::Alice).collect();
    let mut prev = vec![0i64; n];
    let mut next = vec![0i64; n];
    for _ in 0..rounds {
        for u in 0..n {
            let lo = csr.start[u];
            let hi = csr.start[u + 1];
            let acc = if minimizes[u] {
                let mut acc = i64::MAX;
                for k in lo..hi {
                    acc = acc.min(prev[csr.to[k]] - csr.weight[k]);
                }
                acc
            } else {
                let mut acc = i64::MIN;
                for k in lo..hi {
                    acc = acc.max(prev[csr.to[k]] - csr.weight[k]);
                }
                acc
            };
            next[u] = acc.max(0);
        }
        std::mem::swap(&mut prev, &mut next);
    }
    Ok(EnergyFunction::from_values(
        prev.into_iter().map(Energy::Finite).collect(),
    ))
}

/// Exact energies for games whose graph has no negative cycle: `n` sweeps
/// of [`value_iteration`]. With `verify` set, the absence of negative
/// cycles is checked first and a violation reported as an error.
pub fn solve_no_neg_cycles(g: &GameGraph, verify: bool) -> Result<EnergyFunction> {
    if verify {
        if let Some(c) = find_negative_cycle(g.digraph()) {
            let vs: Vec<usize> = c.vertices.iter().map(|&v| v + 1).collect();
            return Err(Error::Precondition(format!(
                "graph has a negative cycle of weight {} through vertices {:?}",
                c.weight, vs
            )));
        }
    }
    value_iteration(g, g.n())
}

/// Exact energies for arbitrary games by iterating the improvement operator
/// until it stabilises.
///
/// Finite requirements never exceed `(n-1) * W`, so a vertex pushed past
/// that bound is declared unbounded and frozen there. Termination is
/// guaranteed because every non-final sweep raises some vertex in a finite
/// value lattice.
pub fn solve_fixpoint(g: &GameGraph) -> Result<EnergyFunction> {
    Ok(solve_fixpoint_with_sweeps(g)?.0)
}

/// Same as [`solve_fixpoint`], also reporting how many sweeps were needed
/// (counting the final sweep that confirms stability).
pub fn solve_fixpoint_with_sweeps(g: &GameGraph) -> Result<(EnergyFunction, usize)> {
    ensure_playable(g)?;
    let n = g.n();
    let cap = (n as i64 - 1) * g.max_weight();
    let csr = Csr::build(g.digraph());
    let minimizes: Vec<bool> = g.owners().iter().map(|&o| o == Owner::Alice).collect();
    let mut prev = vec![Energy::Finite(0); n];
    let mut next = vec![Energy::Finite(0); n];
    // Each vertex climbs through at most cap + 2 states, and every sweep
    // except the last moves at least one vertex up.
    let max_sweeps = (n as i128) * (cap as i128 + 2) + 1;
    let mut sweeps = 0usize;
    loop {
        sweeps += 1;
        if (sweeps as i128) > max_sweeps {
            return Err(Error::Internal(
                "fixpoint iteration exceeded its monotone sweep bound".into(),
            ));
        }
        for u in 0..n {
            if prev[u] == Energy::Infinity {
                next[u] = Energy::Infinity;
                continue;
            }
            let lo = csr.start[u];
            let hi = csr.start[u + 1];
            let mut acc = prev[csr.to[lo]].plus(-csr.weight[lo]);
            if minimizes[u] {
                for k in lo + 1..hi {
                    acc = acc.min(prev[csr.to[k]].plus(-csr.weight[k]));
                }
            } else {
                for k in lo + 1..hi {
                    acc = acc.max(prev[csr.to[k]].plus(-csr.weight[k]));
                }
            }
            acc = acc.max(Energy::Finite(0));
            if let Energy::Finite(x) = acc {
                if x > cap {
                    acc = Energy::Infinity;
                }
            }
            next[u] = acc;
        }
        if next == prev {
            break;
        }
        std::mem::swap(&mut prev, &mut next);
    }
    Ok((EnergyFunction::from_values(prev), sweeps))
}

/// A deterministic positional strategy for one player: a chosen outgoing
/// edge at every vertex that player owns, `None` elsewhere.
///
/// Choices are stored as edge ids so parallel edges stay distinguishable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PositionalStrategy {
    owner: Owner,
    choice: Vec<Option<usize>>,
}

impl PositionalStrategy {
    pub fn new(g: &GameGraph, owner: Owner, choice: Vec<Option<usize>>) -> Result<Self> {
        check_strategy(g, owner, &choice)?;
        Ok(PositionalStrategy { owner, choice })
    }

    /// Builds a strategy from target vertices, entry `v -> targets[v]`.
    /// When parallel edges exist, the lowest edge id to the target is used.
    pub fn from_targets(
        g: &GameGraph,
        owner: Owner,
        targets: &[Option<usize>],
    ) -> Result<Self> {
        if targets.len() != g.n() {
            return Err(Error::InvalidParameter(format!(
                "strategy covers {} vertices but the game has {}",
                targets.len(),
                g.n()
            )));
        }
        let mut choice = vec![None; g.n()];
        for (v, &tgt) in targets.iter().enumerate() {
            let tgt = match tgt {
                Some(t) => t,
                None => continue,
            };
            let eid = g
                .edges()
                .iter()
                .position(|e| e.from == v && e.to == tgt)
                .ok_or_else(|| {
                    Error::Precondition(format!(
                        "no edge from vertex {} to vertex {}",
                        v + 1,
                        tgt + 1
                    ))
                })?;
            choice[v] = Some(eid);
        }
        PositionalStrategy::new(g, owner, choice)
    }

    pub fn owner(&self) -> Owner {
        self.owner
    }

    pub fn edge_choice(&self, v: usize) -> Option<usize> {
        self.choice[v]
    }

    pub fn choices(&self) -> &[Option<usize>] {
        &self.choice
    }

    pub fn target(&self, g: &GameGraph, v: usize) -> Option<usize> {
        self.choice[v].map(|eid| g.edges()[eid].to)
    }
}

fn check_strategy(g: &GameGraph, owner: Owner, choice: &[Option<usize>]) -> Result<()> {
    if choice.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "strategy covers {} vertices but the game has {}",
            choice.len(),
            g.n()
        )));
    }
    for (v, &c) in choice.iter().enumerate() {
        let owned = g.owner(v) == owner;
        match c {
            Some(eid) if owned => {
                let valid = g.edges().get(eid).map_or(false, |e| e.from == v);
                if !valid {
                    return Err(Error::Precondition(format!(
                        "choice at vertex {} is not one of its outgoing edges",
                        v + 1
                    )));
                }
            }
            Some(_) => {
                return Err(Error::Precondition(format!(
                    "vertex {} is not owned by {:?} but the strategy moves there",
                    v + 1,
                    owner
                )));
            }
            None if owned => {
                return Err(Error::Precondition(format!(
                    "strategy for {:?} must pick an edge at vertex {}",
                    owner,
                    v + 1
                )));
            }
            None => {}
        }
    }
    Ok(())
}

/// Follows the unique play under `choice` (one edge id per vertex) until a
/// vertex repeats, then prices the resulting lasso.
fn price_walk(g: &Digraph, choice: &[usize], start: usize) -> Energy {
    let n = g.n();
    let mut first = vec![usize::MAX; n];
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0i64);
    first[start] = 0;
    let mut v = start;
    let mut sum = 0i64;
    let mut low = 0i64;
    loop {
        let e = &g.edges()[choice[v]];
        sum += e.weight;
        low = low.min(sum);
        let u = e.to;
        if first[u] != usize::MAX {
            let lap = sum - prefix[first[u]];
            return if lap < 0 {
                Energy::Infinity
            } else {
                Energy::Finite(-low)
            };
        }
        prefix.push(sum);
        first[u] = prefix.len() - 1;
        v = u;
    }
}

/// Energy demanded at `start` when Alice follows `sigma` and Bob follows
/// `tau`: infinity if the forced lasso's cycle loses energy, otherwise the
/// deepest dip along the way.
pub fn evaluate_strategies(
    g: &GameGraph,
    sigma: &PositionalStrategy,
    tau: &PositionalStrategy,
    start: usize,
) -> Result<Energy> {
    if sigma.owner() != Owner::Alice || tau.owner() != Owner::Bob {
        return Err(Error::InvalidParameter(
            "expected an Alice strategy and a Bob strategy, in that order".into(),
        ));
    }
    check_strategy(g, Owner::Alice, sigma.choices())?;
    check_strategy(g, Owner::Bob, tau.choices())?;
    if start >= g.n() {
        return Err(Error::InvalidParameter(format!(
            "start vertex {} out of range",
            start + 1
        )));
    }
    let merged = merge_choices(g, sigma, tau);
    Ok(price_walk(g.digraph(), &merged, start))
}

fn merge_choices(g: &GameGraph, sigma: &PositionalStrategy, tau: &PositionalStrategy) -> Vec<usize> {
    (0..g.n())
        .map(|v| match g.owner(v) {
            Owner::Alice => sigma.edge_choice(v).expect("validated Alice choice"),
            Owner::Bob => tau.edge_choice(v).expect("validated Bob choice"),
        })
        .collect()
}

/// Exact energies by exhausting positional strategy pairs. Exponential;
/// refuses instances whose joint strategy space exceeds
/// [`DEFAULT_STRATEGY_BUDGET`].
pub fn brute_force(g: &GameGraph) -> Result<EnergyFunction> {
    brute_force_with_budget(g, DEFAULT_STRATEGY_BUDGET)
}

/// [`brute_force`] with an explicit bound on the number of strategy pairs.
pub fn brute_force_with_budget(g: &GameGraph, budget: u64) -> Result<EnergyFunction> {
    ensure_playable(g)?;
    let n = g.n();
    let out = g.digraph().out_edge_ids();
    let mut pairs: u128 = 1;
    for o in &out {
        pairs = pairs.saturating_mul(o.len() as u128);
        if pairs > budget as u128 {
            return Err(Error::Precondition(format!(
                "strategy space holds more than {} joint strategies; \
                 raise the budget or shrink the instance",
                budget
            )));
        }
    }

    let alice: Vec<usize> = (0..n).filter(|&v| g.owner(v) == Owner::Alice).collect();
    let bob: Vec<usize> = (0..n).filter(|&v| g.owner(v) == Owner::Bob).collect();
    let dg = g.digraph();

    let mut choice = vec![0usize; n];
    for v in 0..n {
        choice[v] = out[v][0];
    }

    let mut best: Vec<Option<Energy>> = vec![None; n];
    let mut sigma_idx = vec![0usize; alice.len()];
    loop {
        for (i, &v) in alice.iter().enumerate() {
            choice[v] = out[v][sigma_idx[i]];
        }
        let mut worst: Vec<Option<Energy>> = vec![None; n];
        let mut tau_idx = vec![0usize; bob.len()];
        loop {
            for (i, &v) in bob.iter().enumerate() {
                choice[v] = out[v][tau_idx[i]];
            }
            for s in 0..n {
                let e = price_walk(dg, &choice, s);
                worst[s] = Some(worst[s].map_or(e, |w| w.max(e)));
            }
            if !advance(&mut tau_idx, &bob, &out) {
                break;
            }
        }
        for s in 0..n {
            let w = worst[s].expect("at least one strategy pair");
            best[s] = Some(best[s].map_or(w, |b| b.min(w)));
        }
        if !advance(&mut sigma_idx, &alice, &out) {
            break;
        }
    }
    Ok(EnergyFunction::from_values(
        best.into_iter().map(|b| b.expect("all starts priced")).collect(),
    ))
}

fn advance(idx: &mut [usize], vertices: &[usize], out: &[Vec<usize>]) -> bool {
    for (i, &v) in vertices.iter().enumerate() {
        idx[i] += 1;
        if idx[i] < out[v].len() {
            return true;
        }
        idx[i] = 0;
    }
    false
}

/// Reads an optimal Alice strategy off exact energies: at each Alice vertex
/// pick an edge whose move does not raise the requirement, i.e.
/// `e(v) + w(v,u) >= e(u)`. Ties break toward the lowest target id, then
/// the lowest edge id. Fails if some Alice vertex has no such edge, which
/// means `e` is not the exact energy function.
pub fn extract_alice_strategy(g: &GameGraph, e: &EnergyFunction) -> Result<PositionalStrategy> {
    if e.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "energy function covers {} vertices but the game has {}",
            e.len(),
            g.n()
        )));
    }
    let out = g.digraph().out_edge_ids();
    let mut choice = vec![None; g.n()];
    for v in 0..g.n() {
        if g.owner(v) != Owner::Alice {
            continue;
        }
        if out[v].is_empty() {
            return Err(Error::Precondition(format!(
                "vertex {} has no outgoing edge",
                v + 1
            )));
        }
        let mut best: Option<(usize, usize)> = None;
        for &eid in &out[v] {
            let edge = g.edges()[eid];
            let ok = match e.get(v) {
                Energy::Infinity => true,
                Energy::Finite(x) => match e.get(edge.to) {
                    Energy::Infinity => false,
                    Energy::Finite(y) => x as i128 + edge.weight as i128 >= y as i128,
                },
            };
            if ok {
                let key = (edge.to, eid);
                if best.map_or(true, |b| key < b) {
                    best = Some(key);
                }
            }
        }
        match best {
            Some((_, eid)) => choice[v] = Some(eid),
            None => {
                return Err(Error::Precondition(format!(
                    "no move at vertex {} keeps the energy inequality; the \
                     given values are not exact",
                    v + 1
                )))
            }
        }
    }
    PositionalStrategy::new(g, Owner::Alice, choice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GameGraph;

    fn game(
        n: usize,
        edges: &[(usize, usize, i64)],
        owners: &[Owner],
        w: i64,
    ) -> GameGraph {
        GameGraph::from_list(n, edges, owners, w).unwrap()
    }

    fn mixed_two_cycle() -> GameGraph {
        game(
            2,
            &[(0, 1, -1), (1, 0, 1)],
            &[Owner::Alice, Owner::Bob],
            1,
        )
    }

    #[test]
    fn zero_rounds_gives_zeros() {
        let g = mixed_two_cycle();
        let e = value_iteration(&g, 0).unwrap();
        assert_eq!(e.values(), &[Energy::Finite(0), Energy::Finite(0)]);
    }

    #[test]
    fn losing_loop_grows_linearly() {
        let g = game(1, &[(0, 0, -1)], &[Owner::Bob], 1);
        let e = value_iteration(&g, 5).unwrap();
        assert_eq!(e.get(0), Energy::Finite(5));
    }

    #[test]
    fn sweeps_price_bounded_survival() {
        // From 0 Alice chooses between a zero loop behind -2 and a losing
        // loop behind -1. Two moves cost 2 via the zero loop.
        let g = game(
            3,
            &[(0, 1, -2), (0, 2, -1), (1, 1, 0), (2, 2, -1)],
            &[Owner::Alice, Owner::Alice, Owner::Alice],
            2,
        );
        let e = value_iteration(&g, 2).unwrap();
        assert_eq!(e.get(0), Energy::Finite(2));
        assert_eq!(e.get(1), Energy::Finite(0));
        assert_eq!(e.get(2), Energy::Finite(2));
    }

    #[test]
    fn refuses_stuck_vertices() {
        let g = game(2, &[(0, 1, 1)], &[Owner::Alice, Owner::Alice], 1);
        assert!(value_iteration(&g, 3).is_err());
    }

    #[test]
    fn no_neg_cycle_solver_matches_hand_values() {
        let g = mixed_two_cycle();
        let e = solve_no_neg_cycles(&g, true).unwrap();
        assert_eq!(e.get(0), Energy::Finite(1));
        assert_eq!(e.get(1), Energy::Finite(0));
    }

    #[test]
    fn verification_catches_negative_cycles() {
        let g = game(1, &[(0, 0, -1)], &[Owner::Alice], 1);
        let err = solve_no_neg_cycles(&g, true).unwrap_err();
        assert!(err.to_string().contains("negative cycle"));
        // without verification the sweeps run and report a finite answer
        assert!(solve_no_neg_cycles(&g, false).is_ok());
    }

    #[test]
    fn fixpoint_freezes_unbounded_vertices() {
        let g = game(1, &[(0, 0, -1)], &[Owner::Bob], 1);
        let e = solve_fixpoint(&g).unwrap();
        assert_eq!(e.get(0), Energy::Infinity);
    }

    #[test]
    fn fixpoint_matches_two_cycle() {
        let (e, sweeps) = solve_fixpoint_with_sweeps(&mixed_two_cycle()).unwrap();
        assert_eq!(e.get(0), Energy::Finite(1));
        assert_eq!(e.get(1), Energy::Finite(0));
        assert!(sweeps >= 2);
    }

    #[test]
    fn nonnegative_weights_need_nothing() {
        let g = game(
            2,
            &[(0, 1, 0), (1, 0, 3)],
            &[Owner::Alice, Owner::Bob],
            3,
        );
        let e = solve_fixpoint(&g).unwrap();
        assert_eq!(e.values(), &[Energy::Finite(0), Energy::Finite(0)]);
    }

    #[test]
    fn strategies_must_cover_exactly_the_owned_vertices() {
        let g = mixed_two_cycle();
        assert!(PositionalStrategy::new(&g, Owner::Alice, vec![Some(0), None]).is_ok());
        assert!(PositionalStrategy::new(&g, Owner::Alice, vec![None, None]).is_err());
        assert!(PositionalStrategy::new(&g, Owner::Alice, vec![Some(0), Some(1)]).is_err());
        // edge 1 leaves vertex 1, not vertex 0
        assert!(PositionalStrategy::new(&g, Owner::Alice, vec![Some(1), None]).is_err());
    }

    #[test]
    fn targets_resolve_to_lowest_parallel_edge() {
        let g = game(
            2,
            &[(0, 1, 3), (0, 1, -2), (1, 1, 0)],
            &[Owner::Alice, Owner::Bob],
            3,
        );
        let s = PositionalStrategy::from_targets(&g, Owner::Alice, &[Some(1), None]).unwrap();
        assert_eq!(s.edge_choice(0), Some(0));
        assert_eq!(s.target(&g, 0), Some(1));
    }

    #[test]
    fn evaluation_prices_the_forced_lasso() {
        let g = mixed_two_cycle();
        let sigma = PositionalStrategy::new(&g, Owner::Alice, vec![Some(0), None]).unwrap();
        let tau = PositionalStrategy::new(&g, Owner::Bob, vec![None, Some(1)]).unwrap();
        assert_eq!(
            evaluate_strategies(&g, &sigma, &tau, 0).unwrap(),
            Energy::Finite(1)
        );
        assert_eq!(
            evaluate_strategies(&g, &sigma, &tau, 1).unwrap(),
            Energy::Finite(0)
        );
    }

    #[test]
    fn evaluation_detects_losing_cycles() {
        let g = game(
            2,
            &[(0, 1, 5), (1, 1, -1)],
            &[Owner::Alice, Owner::Alice],
            5,
        );
        let sigma =
            PositionalStrategy::new(&g, Owner::Alice, vec![Some(0), Some(1)]).unwrap();
        let tau = PositionalStrategy::new(&g, Owner::Bob, vec![None, None]).unwrap();
        assert_eq!(
            evaluate_strategies(&g, &sigma, &tau, 0).unwrap(),
            Energy::Infinity
        );
    }

    #[test]
    fn brute_force_agrees_on_the_two_cycle() {
        let e = brute_force(&mixed_two_cycle()).unwrap();
        assert_eq!(e.get(0), Energy::Finite(1));
        assert_eq!(e.get(1), Energy::Finite(0));
    }

    #[test]
    fn brute_force_respects_the_budget() {
        let g = game(
            2,
            &[(0, 1, 1), (0, 1, -1), (1, 0, 0)],
            &[Owner::Alice, Owner::Bob],
            1,
        );
        assert!(brute_force_with_budget(&g, 1).is_err());
        assert!(brute_force_with_budget(&g, 2).is_ok());
    }

    #[test]
    fn brute_force_lets_bob_pick_the_worse_branch() {
        let g = game(
            3,
            &[(0, 1, 0), (0, 2, -5), (1, 1, 0), (2, 2, 0)],
            &[Owner::Bob, Owner::Bob, Owner::Bob],
            5,
        );
        let e = brute_force(&g).unwrap();
        assert_eq!(e.get(0), Energy::Finite(5));
    }

    #[test]
    fn extraction_reads_the_documented_strategy() {
        let g = mixed_two_cycle();
        let e = solve_fixpoint(&g).unwrap();
        let s = extract_alice_strategy(&g, &e).unwrap();
        assert_eq!(s.target(&g, 0), Some(1));
        assert_eq!(s.edge_choice(1), None);
    }

    #[test]
    fn extraction_breaks_ties_toward_low_targets() {
        let g = game(
            3,
            &[(0, 2, 0), (0, 1, 0), (1, 1, 0), (2, 2, 0)],
            &[Owner::Alice, Owner::Alice, Owner::Alice],
            1,
        );
        let e = solve_fixpoint(&g).unwrap();
        let s = extract_alice_strategy(&g, &e).unwrap();
        assert_eq!(s.target(&g, 0), Some(1));
    }

    #[test]
    fn extraction_rejects_non_fixpoints() {
        let g = mixed_two_cycle();
        let err = extract_alice_strategy(&g, &EnergyFunction::zeros(2)).unwrap_err();
        assert!(err.to_string().contains("not exact"));
    }

    #[test]
    fn replaying_the_extracted_strategy_meets_the_bound() {
        let g = mixed_two_cycle();
        let e = solve_fixpoint(&g).unwrap();
        let sigma = extract_alice_strategy(&g, &e).unwrap();
        // Bob has one move here, so the replay must hit the value exactly.
        let tau = PositionalStrategy::new(&g, Owner::Bob, vec![None, Some(1)]).unwrap();
        for v in 0..2 {
            assert_eq!(evaluate_strategies(&g, &sigma, &tau, v).unwrap(), e.get(v));
        }
    }
}
