//! Solver for games in which every vertex belongs to Alice.
//!
//! With a single player the game is a path problem. The solver first finds
//! the vertices of value zero: those that can reach a closed walk whose
//! every prefix is nonnegative. That set comes out of the all-pairs
//! nonnegative-prefix-path relation computed in [`crate::apnp`]. Contracting
//! the set to a sink reduces the rest to a longest-path computation, handled
//! by Bellman-Ford on the reversed graph with negated weights.

use crate::apnp::apnp;
use crate::energy::{Energy, EnergyFunction};
use crate::error::{Error, Result};
use crate::graph::{ensure_all_owned, ensure_playable, Digraph, Edge, GameGraph, Owner};
use crate::matrix::ReachMatrix;
use crate::sssp::bellman_ford;

/// Vertices from which Alice can play forever starting with zero energy.
#[derive(Clone, Debug)]
pub struct ZeroEnergySet {
    mask: Vec<bool>,
}

impl ZeroEnergySet {
    pub fn contains(&self, v: usize) -> bool {
        self.mask[v]
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.mask.len()).filter(|&v| self.mask[v]).collect()
    }
}

/// Computes the zero-energy vertices from the nonnegative-prefix relation
/// `reach` of the same graph: a vertex counts when it has a prefix-safe
/// walk to some vertex lying on a prefix-safe closed walk.
pub fn zero_energy_set(g: &GameGraph, reach: &ReachMatrix) -> Result<ZeroEnergySet> {
    ensure_all_owned(g, Owner::Alice)?;
    let n = g.n();
    if reach.n() != n {
        return Err(Error::InvalidParameter(format!(
            "relation is over {} vertices but the game has {}",
            reach.n(),
            n
        )));
    }
    let on_loop: Vec<bool> = (0..n).map(|u| reach.get(u, u)).collect();
    let mask = (0..n)
        .map(|v| on_loop[v] || (0..n).any(|u| on_loop[u] && reach.get(v, u)))
        .collect();
    Ok(ZeroEnergySet { mask })
}

/// Replaces the zero-energy set by a fresh sink vertex `t`.
///
/// Vertices outside `zero` keep their ids; members of `zero` stay as
/// isolated placeholders so no renumbering is needed. Edges leaving the set
/// are dropped, edges entering it are redirected to `t`. Returns the
/// contracted graph together with the id of `t` (always the old `n`).
pub fn contract_to_sink(g: &GameGraph, zero: &ZeroEnergySet) -> Result<(Digraph, usize)> {
    if zero.is_empty() {
        return Err(Error::Precondition(
            "cannot contract an empty zero-energy set".into(),
        ));
    }
    let n = g.n();
    let t = n;
    let mut edges = Vec::with_capacity(g.edges().len());
    for e in g.edges() {
        if zero.contains(e.from) {
            continue;
        }
        let to = if zero.contains(e.to) { t } else { e.to };
        edges.push(Edge::new(e.from, to, e.weight));
    }
    Ok((Digraph::new(n + 1, edges)?, t))
}

/// Exact energies for an all-Alice game.
///
/// Runs in polynomial time: the zero-energy set costs one all-pairs
/// prefix-reachability computation, the finite values one Bellman-Ford pass.
/// Vertices that cannot reach the zero-energy set get [`Energy::Infinity`].
pub fn solve_all_alice(g: &GameGraph) -> Result<EnergyFunction> {
    ensure_all_owned(g, Owner::Alice)?;
    ensure_playable(g)?;
    let reach = apnp(g.digraph(), g.max_weight())?;
    let zero = zero_energy_set(g, &reach)?;
    if zero.is_empty() {
        return Ok(EnergyFunction::all_infinite(g.n()));
    }
    let (contracted, t) = contract_to_sink(g, &zero)?;

    // Highest-weight walks to t become shortest paths after reversing and
    // negating. Any closed walk among the remaining vertices has negative
    // weight (otherwise its vertices would sit in the zero-energy set), so
    // Bellman-Ford must terminate without finding a negative cycle.
    let outcome = bellman_ford(&contracted.reversed().negated(), t)?;
    let sp = match outcome.shortest() {
        Some(sp) => sp,
        None => {
            return Err(Error::Internal(
                "nonnegative closed walk survived the zero-energy contraction".into(),
            ))
        }
    };

    let mut result = EnergyFunction::zeros(g.n());
    for v in 0..g.n() {
        if zero.contains(v) {
            continue;
        }
        match sp.dist(v) {
            None => result.set(v, Energy::Infinity),
            Some(d) => {
                if d <= 0 {
                    return Err(Error::Internal(format!(
                        "vertex {} got a nonpositive energy {} outside the \
                         zero-energy set",
                        v + 1,
                        d
                    )));
                }
                result.set(v, Energy::Finite(d));
            }
        }
    }
    Ok(result)
}
