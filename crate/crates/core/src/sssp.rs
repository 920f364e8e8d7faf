//! Single-source shortest paths on graphs with negative weights.
//!
//! Bellman-Ford with an early exit: relaxation rounds stop as soon as a
//! full pass changes nothing, and a further pass that still relaxes an
//! edge certifies a reachable negative cycle, which is extracted from the
//! predecessor pointers as a concrete witness.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge};

/// Shortest-path distances from a fixed source. `dist[v]` is `None` when
/// `v` is unreachable, never a saturated stand-in value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SsspResult {
    dist: Vec<Option<i64>>,
    parent_edge: Vec<Option<usize>>,
}

impl SsspResult {
    pub fn dist(&self, v: usize) -> Option<i64> {
        self.dist[v]
    }

    pub fn dists(&self) -> &[Option<i64>] {
        &self.dist
    }

    /// The edge through which `v` was last relaxed.
    pub fn parent_edge(&self, v: usize) -> Option<usize> {
        self.parent_edge[v]
    }

    /// The predecessor of `v` on a shortest path from the source.
    pub fn parent(&self, v: usize, g: &Digraph) -> Option<usize> {
        self.parent_edge[v].map(|eid| g.edges()[eid].from)
    }
}

/// A directed cycle of negative total weight, listed in traversal order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NegativeCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub weight: i64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SsspOutcome {
    Shortest(SsspResult),
    NegativeCycle(NegativeCycle),
}

impl SsspOutcome {
    pub fn shortest(self) -> Option<SsspResult> {
        match self {
            SsspOutcome::Shortest(r) => Some(r),
            SsspOutcome::NegativeCycle(_) => None,
        }
    }

    pub fn negative_cycle(self) -> Option<NegativeCycle> {
        match self {
            SsspOutcome::Shortest(_) => None,
            SsspOutcome::NegativeCycle(c) => Some(c),
        }
    }
}

pub fn bellman_ford(g: &Digraph, source: usize) -> Result<SsspOutcome> {
    if source >= g.n() {
        return Err(Error::InvalidParameter(format!(
            "source {} out of range for {} vertices",
            source,
            g.n()
        )));
    }
    let n = g.n();
    let edges = g.edges();
    let mut dist: Vec<Option<i64>> = vec![None; n];
    let mut parent_edge: Vec<Option<usize>> = vec![None; n];
    dist[source] = Some(0);

    let mut needs_check = true;
    for _ in 0..n.saturating_sub(1) {
        let mut changed = false;
        for (eid, e) in edges.iter().enumerate() {
            if let Some(du) = dist[e.from] {
                let cand = du + e.weight;
                if dist[e.to].map_or(true, |dv| cand < dv) {
                    dist[e.to] = Some(cand);
                    parent_edge[e.to] = Some(eid);
                    changed = true;
                }
            }
        }
        if !changed {
            needs_check = false;
            break;
        }
    }

    if needs_check {
        for (eid, e) in edges.iter().enumerate() {
            if let Some(du) = dist[e.from] {
                let cand = du + e.weight;
                if dist[e.to].map_or(true, |dv| cand < dv) {
                    dist[e.to] = Some(cand);
                    parent_edge[e.to] = Some(eid);
                    let cycle = extract_cycle(edges, &parent_edge, e.to, n);
                    return Ok(SsspOutcome::NegativeCycle(cycle));
                }
            }
        }
    }

    Ok(SsspOutcome::Shortest(SsspResult { dist, parent_edge }))
}

/// Walks predecessor pointers from a vertex that was relaxed after n-1
/// rounds. After n backward steps the walk sits on the cycle itself; any
/// cycle in the predecessor graph has negative weight.
fn extract_cycle(
    edges: &[Edge],
    parent_edge: &[Option<usize>],
    start: usize,
    n: usize,
) -> NegativeCycle {
    let mut x = start;
    for _ in 0..n {
        let eid = parent_edge[x].expect("relaxed vertex without parent");
        x = edges[eid].from;
    }
    let anchor = x;
    let mut rev_edges = Vec::new();
    let mut cur = anchor;
    loop {
        let eid = parent_edge[cur].expect("cycle vertex without parent");
        rev_edges.push(eid);
        cur = edges[eid].from;
        if cur == anchor {
            break;
        }
    }
    rev_edges.reverse();
    let vertices: Vec<usize> = rev_edges.iter().map(|&eid| edges[eid].from).collect();
    let weight: i64 = rev_edges.iter().map(|&eid| edges[eid].weight).sum();
    debug_assert!(weight < 0, "predecessor cycle must be negative");
    NegativeCycle {
        vertices,
        edges: rev_edges,
        weight,
    }
}

/// Negative-cycle check for the whole graph: runs Bellman-Ford from a
/// fresh super-source with a zero-weight edge to every vertex, so every
/// cycle is in scope regardless of connectivity.
pub fn find_negative_cycle(g: &Digraph) -> Option<NegativeCycle> {
    let n = g.n();
    let mut edges: Vec<Edge> = g.edges().to_vec();
    for v in 0..n {
        edges.push(Edge::new(n, v, 0));
    }
    let aug = Digraph::new(n + 1, edges).expect("augmented graph is well-formed");
    match bellman_ford(&aug, n).expect("source in range") {
        SsspOutcome::Shortest(_) => None,
        SsspOutcome::NegativeCycle(c) => {
            debug_assert!(c.vertices.iter().all(|&v| v < n));
            Some(c)
        }
    }
}
