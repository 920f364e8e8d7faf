//! All-pairs nonnegative-prefix reachability (APNP).
//!
//! `apnp(g, W)` answers, for every ordered pair `(u, v)`, whether a walk
//! from `u` to `v` exists along which every prefix sum of edge weights
//! stays nonnegative; for `u = v` the walk must contain at least one
//! edge. This is the reachability question of a player who starts with
//! zero energy and may never go below zero.
//!
//! The computation runs in three stages:
//!
//! 1. [`expand_weights`] rewrites arbitrary weights in `[-W, W]` into an
//!    equivalent graph whose weights are only `-1`, `0`, `+1`, using a
//!    ladder of `2W + 1` copies per vertex.
//! 2. [`split_zero_edges`] removes the zero weights: each vertex with
//!    zero out-edges gets one auxiliary relay, reached by a `+1` edge and
//!    leaving by `-1` edges, which cancels out.
//! 3. On the residual `+1`/`-1` graph, [`dyck_reachability`] saturates
//!    the pairs connected by a weight-zero walk with nonnegative
//!    prefixes. Pairs connected that way, or by a single original edge of
//!    nonnegative weight, become the edges of an unweighted step graph
//!    ([`build_step_graph`]) whose ordinary transitive closure is the
//!    answer: any nonnegative-prefix walk decomposes at its running
//!    minima into such steps.
//!
//! [`apnp_oracle`] recomputes the relation by brute-force search over
//! (vertex, energy) states and exists to cross-check the pipeline on
//! small instances.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge};
use crate::matrix::ReachMatrix;

/// Nonnegative-prefix weight-zero connectivity on a `+1`/`-1` graph.
///
/// `nonempty(u, v)` holds when a walk with at least one edge leads from
/// `u` to `v`, has total weight zero, and keeps every prefix sum
/// nonnegative. `with_empty` additionally contains the diagonal (the
/// empty walk) and nothing else beyond `nonempty`.
#[derive(Clone, Debug)]
pub struct DyckRelations {
    pub with_empty: ReachMatrix,
    pub nonempty: ReachMatrix,
}

fn check_unit_weights(g: &Digraph, allow_zero: bool) -> Result<()> {
    for (i, e) in g.edges().iter().enumerate() {
        let ok = e.weight == 1 || e.weight == -1 || (allow_zero && e.weight == 0);
        if !ok {
            return Err(Error::Precondition(format!(
                "edge {} has weight {}, expected {}",
                i,
                e.weight,
                if allow_zero { "-1, 0 or +1" } else { "-1 or +1" }
            )));
        }
    }
    Ok(())
}

/// Eliminates zero-weight edges from a graph with weights in
/// `{-1, 0, +1}` without changing nonnegative-prefix connectivity among
/// the original vertices.
///
/// Every vertex `u` with at least one zero out-edge gets a single
/// auxiliary vertex `u'` and an edge `(u, u', +1)`; each zero edge
/// `(u, v)` is replaced by `(u', v, -1)`. Returns the rewritten graph and
/// the ids of the added vertices.
pub fn split_zero_edges(g: &Digraph) -> Result<(Digraph, Vec<usize>)> {
    check_unit_weights(g, true)?;
    let n = g.n();
    let mut aux_of: Vec<Option<usize>> = vec![None; n];
    let mut next = n;
    for e in g.edges() {
        if e.weight == 0 && aux_of[e.from].is_none() {
            aux_of[e.from] = Some(next);
            next += 1;
        }
    }
    let mut edges = Vec::with_capacity(g.edge_count() + (next - n));
    for e in g.edges() {
        if e.weight == 0 {
            let aux = aux_of[e.from].expect("aux allocated for zero out-edge");
            edges.push(Edge::new(aux, e.to, -1));
        } else {
            edges.push(*e);
        }
    }
    let mut added = Vec::with_capacity(next - n);
    for (u, aux) in aux_of.iter().enumerate() {
        if let Some(a) = *aux {
            edges.push(Edge::new(u, a, 1));
            added.push(a);
        }
    }
    Ok((
        Digraph::new(next, edges).expect("split graph is well-formed"),
        added,
    ))
}

struct Saturation {
    with_empty: ReachMatrix,
    nonempty: ReachMatrix,
    nonempty_t: ReachMatrix,
    /// pairs newly added to `with_empty`, awaiting the arch rule
    work: Vec<(usize, usize)>,
    /// pairs newly added to `nonempty`, awaiting transitive closure
    pending: Vec<(usize, usize)>,
}

impl Saturation {
    fn insert_nonempty(&mut self, u: usize, v: usize) {
        if self.nonempty.get(u, v) {
            return;
        }
        self.nonempty.set(u, v);
        self.nonempty_t.set(v, u);
        self.pending.push((u, v));
        if !self.with_empty.get(u, v) {
            self.with_empty.set(u, v);
            self.work.push((u, v));
        }
    }
}

/// Saturates the weight-zero nonnegative-prefix relation of a graph whose
/// weights are all `+1` or `-1`.
///
/// A non-empty witness walk splits at its returns to the starting level
/// into minimal segments, and each minimal segment is an arch: a `+1`
/// edge, an inner walk one level up (itself of this same shape, possibly
/// empty), and a closing `-1` edge. The worklist therefore alternates two
/// rules until nothing changes: every known pair `(x, y)` combines with
/// edges `(u, x, +1)` and `(y, v, -1)` into the pair `(u, v)`, and the
/// non-empty relation is kept transitively closed. Cubic in the vertex
/// count at worst, which is fine at gadget scale.
pub fn dyck_reachability(g: &Digraph) -> Result<DyckRelations> {
    check_unit_weights(g, false)?;
    let n = g.n();
    let mut plus_in = vec![Vec::new(); n];
    let mut minus_out = vec![Vec::new(); n];
    for e in g.edges() {
        if e.weight == 1 {
            plus_in[e.to].push(e.from);
        } else {
            minus_out[e.from].push(e.to);
        }
    }

    let mut sat = Saturation {
        with_empty: ReachMatrix::identity(n),
        nonempty: ReachMatrix::new(n),
        nonempty_t: ReachMatrix::new(n),
        work: (0..n).map(|u| (u, u)).collect(),
        pending: Vec::new(),
    };

    let mut scratch: Vec<usize> = Vec::new();
    while let Some((x, y)) = sat.work.pop() {
        for &u in &plus_in[x] {
            for vi in 0..minus_out[y].len() {
                let v = minus_out[y][vi];
                sat.insert_nonempty(u, v);
            }
        }
        while let Some((a, b)) = sat.pending.pop() {
            scratch.clear();
            scratch.extend(sat.nonempty.row_bits(b));
            for i in 0..scratch.len() {
                sat.insert_nonempty(a, scratch[i]);
            }
            scratch.clear();
            scratch.extend(sat.nonempty_t.row_bits(a));
            for i in 0..scratch.len() {
                sat.insert_nonempty(scratch[i], b);
            }
        }
    }

    Ok(DyckRelations {
        with_empty: sat.with_empty,
        nonempty: sat.nonempty,
    })
}

/// The unweighted graph whose edges are the moves that cost no energy
/// overall: `(u, v)` is present when the split graph admits a non-empty
/// weight-zero nonnegative-prefix walk from `u` to `v`, or when the
/// original graph has an edge `(u, v)` of nonnegative weight. Self-edges
/// arise only from genuine walks or self-loops, never from the identity.
pub fn build_step_graph(original: &Digraph, split: &Digraph, dyck: &DyckRelations) -> Digraph {
    let n = original.n();
    debug_assert!(n <= split.n());
    debug_assert_eq!(dyck.nonempty.n(), split.n());
    let mut adj = ReachMatrix::new(n);
    for u in 0..n {
        for v in dyck.nonempty.row_bits(u) {
            if v < n {
                adj.set(u, v);
            }
        }
    }
    for e in original.edges() {
        if e.weight >= 0 {
            adj.set(e.from, e.to);
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in adj.row_bits(u) {
            edges.push(Edge::new(u, v, 0));
        }
    }
    Digraph::new(n, edges).expect("step graph is well-formed")
}

/// Reachability by walks with at least one edge: `(u, v)` for `u != v`
/// means an ordinary path exists, and `(u, u)` means some closed walk
/// through `u` exists. Weights are ignored. Runs one breadth-first sweep
/// per source over bit-packed adjacency rows.
pub fn transitive_closure(g: &Digraph) -> ReachMatrix {
    let n = g.n();
    let mut adj = ReachMatrix::new(n);
    for e in g.edges() {
        adj.set(e.from, e.to);
    }
    let mut result = ReachMatrix::new(n);
    let mut queue: Vec<usize> = Vec::new();
    for u in 0..n {
        queue.clear();
        result.absorb_row(u, &adj, u, &mut queue);
        while let Some(v) = queue.pop() {
            result.absorb_row(u, &adj, v, &mut queue);
        }
    }
    result
}

/// APNP for graphs whose weights are already in `{-1, 0, +1}`.
pub fn apnp_small_weights(g: &Digraph) -> Result<ReachMatrix> {
    let (split, _added) = split_zero_edges(g)?;
    let dyck = dyck_reachability(&split)?;
    let step = build_step_graph(g, &split, &dyck);
    Ok(transitive_closure(&step))
}

/// Correspondence between a graph and its unit-weight expansion: each
/// original vertex `v` becomes a ladder of copies at levels `-W..=W`,
/// with the level-0 copy as the entry point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GadgetMap {
    origin: Vec<usize>,
    level: Vec<(usize, i64)>,
}

impl GadgetMap {
    /// The expanded id of the level-0 copy of an original vertex.
    pub fn origin(&self, v: usize) -> usize {
        self.origin[v]
    }

    /// The original vertex and level of an expanded vertex.
    pub fn level(&self, x: usize) -> (usize, i64) {
        self.level[x]
    }

    pub fn expanded_n(&self) -> usize {
        self.level.len()
    }
}

/// Rewrites a graph with weights in `[-W, W]` into one with weights in
/// `{-1, 0, +1}` that has the same nonnegative-prefix connectivity
/// between level-0 copies.
///
/// Each vertex `v` becomes `2W + 1` copies: an ascending chain
/// `v^0 -> v^1 -> ... -> v^W` of `+1` edges banks energy one unit at a
/// time, a descending chain `v^0 -> v^-1 -> ... -> v^-W` of `-1` edges
/// pays it back, and an original edge `(u, v, k)` becomes the free hop
/// `(u^k, v^0, 0)`: traversing it is only possible after climbing (or
/// descending) to level `k` first, which is exactly the energy the
/// original edge would add or consume.
pub fn expand_weights(g: &Digraph, w_max: i64) -> Result<(Digraph, GadgetMap)> {
    if w_max < 0 {
        return Err(Error::InvalidParameter(format!(
            "weight bound {w_max} must be nonnegative"
        )));
    }
    for (i, e) in g.edges().iter().enumerate() {
        if e.weight.abs() > w_max {
            return Err(Error::Precondition(format!(
                "edge {} has weight {} outside [-{w_max}, {w_max}]",
                i, e.weight
            )));
        }
    }
    let levels = usize::try_from(2 * w_max + 1)
        .ok()
        .and_then(|l| l.checked_mul(g.n()).map(|total| (l, total)))
        .ok_or_else(|| {
            Error::InvalidParameter(format!("expansion with W = {w_max} is too large"))
        })?;
    let (levels, total) = levels;
    let off = w_max as usize;
    let id = |v: usize, lvl: i64| v * levels + (lvl + w_max) as usize;

    let mut origin = Vec::with_capacity(g.n());
    let mut level = Vec::with_capacity(total);
    for v in 0..g.n() {
        origin.push(id(v, 0));
        for l in 0..levels {
            level.push((v, l as i64 - w_max));
        }
    }
    debug_assert_eq!(origin.len(), g.n());
    debug_assert!(origin.iter().all(|&x| level[x].1 == 0 && x % levels == off));

    let mut edges = Vec::with_capacity(g.n() * (levels - 1) + g.edge_count());
    for v in 0..g.n() {
        for l in 1..=w_max {
            edges.push(Edge::new(id(v, l - 1), id(v, l), 1));
            edges.push(Edge::new(id(v, -(l - 1)), id(v, -l), -1));
        }
    }
    for e in g.edges() {
        edges.push(Edge::new(id(e.from, e.weight), id(e.to, 0), 0));
    }
    let expanded = Digraph::new(total, edges).expect("expanded graph is well-formed");
    Ok((expanded, GadgetMap { origin, level }))
}

/// All-pairs nonnegative-prefix reachability for weights in `[-W, W]`.
pub fn apnp(g: &Digraph, w_max: i64) -> Result<ReachMatrix> {
    let (expanded, map) = expand_weights(g, w_max)?;
    let small = apnp_small_weights(&expanded)?;
    let mut result = ReachMatrix::new(g.n());
    for u in 0..g.n() {
        for v in 0..g.n() {
            if small.get(map.origin(u), map.origin(v)) {
                result.set(u, v);
            }
        }
    }
    Ok(result)
}

/// Brute-force APNP by breadth-first search over (vertex, energy) states,
/// for cross-checking the pipeline. Energy saturates at `n * W`: from
/// that level every prefix along a further simple path stays positive, so
/// higher values never change reachability. Memory grows with
/// `n^2 * W`; intended for small instances.
pub fn apnp_oracle(g: &Digraph, w_max: i64) -> ReachMatrix {
    let n = g.n();
    let cap = (n as i64).saturating_mul(w_max.max(0));
    let stride = usize::try_from(cap).expect("oracle cap fits usize") + 1;
    let out = g.out_edge_ids();
    let edges = g.edges();
    let mut result = ReachMatrix::new(n);
    let mut visited = vec![false; n * stride];
    let mut stack: Vec<(usize, i64)> = Vec::new();
    for s in 0..n {
        visited.fill(false);
        visited[s * stride] = true;
        stack.push((s, 0));
        while let Some((v, energy)) = stack.pop() {
            for &eid in &out[v] {
                let e = edges[eid];
                let next = energy + e.weight;
                if next < 0 {
                    continue;
                }
                result.set(s, e.to);
                let next = next.min(cap) as usize;
                if !visited[e.to * stride + next] {
                    visited[e.to * stride + next] = true;
                    stack.push((e.to, next as i64));
                }
            }
        }
    }
    result
}
