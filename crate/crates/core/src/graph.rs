use std::fmt;

use crate::error::{Error, Result};

/// Owner of a vertex. Alice minimizes the required energy, Bob maximizes it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Owner {
    Alice,
    Bob,
}

impl Owner {
    pub fn letter(self) -> char {
        match self {
            Owner::Alice => 'A',
            Owner::Bob => 'B',
        }
    }
}

/// A directed edge with an integer weight. Vertex ids are zero-based in
/// memory; the file format is one-based.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub weight: i64,
}

impl Edge {
    pub fn new(from: usize, to: usize, weight: i64) -> Self {
        Edge { from, to, weight }
    }
}

impl From<(usize, usize, i64)> for Edge {
    fn from((from, to, weight): (usize, usize, i64)) -> Self {
        Edge { from, to, weight }
    }
}

/// A weighted directed graph. Parallel edges and self-loops are allowed,
/// and vertices may have out-degree zero. Immutable once built.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Digraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            if e.from >= n || e.to >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge {} connects {} -> {} but the graph has {} vertices",
                    i, e.from, e.to, n
                )));
            }
        }
        Ok(Digraph { n, edges })
    }

    pub fn from_list(n: usize, list: &[(usize, usize, i64)]) -> Result<Self> {
        Digraph::new(n, list.iter().map(|&t| Edge::from(t)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Outgoing edge ids grouped by source vertex.
    pub fn out_edge_ids(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            out[e.from].push(i);
        }
        out
    }

    /// Incoming edge ids grouped by target vertex.
    pub fn in_edge_ids(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.to].push(i);
        }
        inc
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            deg[e.from] += 1;
        }
        deg
    }

    /// The graph with every edge reversed; weights are kept.
    pub fn reversed(&self) -> Digraph {
        Digraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| Edge::new(e.to, e.from, e.weight))
                .collect(),
        }
    }

    /// The graph with every weight negated.
    pub fn negated(&self) -> Digraph {
        Digraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| Edge::new(e.from, e.to, -e.weight))
                .collect(),
        }
    }
}

/// A two-player game graph: a digraph plus an owner per vertex and the
/// declared weight bound `W` (every weight must satisfy `|w| <= W`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GameGraph {
    graph: Digraph,
    owners: Vec<Owner>,
    max_weight: i64,
}

impl GameGraph {
    pub fn new(graph: Digraph, owners: Vec<Owner>, max_weight: i64) -> Result<Self> {
        if owners.len() != graph.n() {
            return Err(Error::InvalidParameter(format!(
                "{} owner tags for {} vertices",
                owners.len(),
                graph.n()
            )));
        }
        if max_weight < 0 {
            return Err(Error::InvalidParameter(format!(
                "negative weight bound {max_weight}"
            )));
        }
        // Prefix sums along any play stay within n*W; the factor 4 leaves
        // headroom for walks of a few n steps, so all downstream
        // arithmetic fits in i64.
        if (graph.n() as i128) * (max_weight as i128) * 4 > i64::MAX as i128 {
            return Err(Error::InvalidParameter(format!(
                "n * W = {} * {} does not fit in 64-bit arithmetic",
                graph.n(),
                max_weight
            )));
        }
        Ok(GameGraph {
            graph,
            owners,
            max_weight,
        })
    }

    pub fn from_list(
        n: usize,
        list: &[(usize, usize, i64)],
        owners: &[Owner],
        max_weight: i64,
    ) -> Result<Self> {
        GameGraph::new(Digraph::from_list(n, list)?, owners.to_vec(), max_weight)
    }

    pub fn digraph(&self) -> &Digraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edges(&self) -> &[Edge] {
        self.graph.edges()
    }

    pub fn owner(&self, v: usize) -> Owner {
        self.owners[v]
    }

    pub fn owners(&self) -> &[Owner] {
        &self.owners
    }

    pub fn max_weight(&self) -> i64 {
        self.max_weight
    }

    pub fn all_owned_by(&self, owner: Owner) -> bool {
        self.owners.iter().all(|&o| o == owner)
    }
}

/// A defect reported by [`validate_game`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// Game play gets stuck at a vertex without outgoing edges.
    NoOutEdge(usize),
    /// An edge weight falls outside the declared bound.
    WeightOutOfRange { edge: usize, weight: i64, bound: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoOutEdge(v) => {
                write!(f, "vertex {} has no outgoing edge", v + 1)
            }
            Violation::WeightOutOfRange {
                edge,
                weight,
                bound,
            } => write!(
                f,
                "edge {} has weight {} outside [-{}, {}]",
                edge, weight, bound, bound
            ),
        }
    }
}

/// Checks that a game graph is playable: every vertex has an outgoing edge
/// and every weight respects the declared bound. Returns all violations;
/// an empty list means the instance is valid.
pub fn validate_game(g: &GameGraph) -> Vec<Violation> {
    let mut violations = Vec::new();
    let deg = g.digraph().out_degrees();
    for (v, &d) in deg.iter().enumerate() {
        if d == 0 {
            violations.push(Violation::NoOutEdge(v));
        }
    }
    for (i, e) in g.edges().iter().enumerate() {
        if e.weight.abs() > g.max_weight() {
            violations.push(Violation::WeightOutOfRange {
                edge: i,
                weight: e.weight,
                bound: g.max_weight(),
            });
        }
    }
    violations
}

pub(crate) fn ensure_all_owned(g: &GameGraph, owner: Owner) -> Result<()> {
    match g.owners().iter().position(|&o| o != owner) {
        None => Ok(()),
        Some(v) => Err(Error::Precondition(format!(
            "vertex {} is not owned by {:?}; this solver handles games where \
             every vertex belongs to {:?}",
            v + 1,
            owner,
            owner
        ))),
    }
}

pub(crate) fn ensure_playable(g: &GameGraph) -> Result<()> {
    match g.digraph().out_degrees().iter().position(|&d| d == 0) {
        None => Ok(()),
        Some(v) => Err(Error::Precondition(format!(
            "vertex {} has no outgoing edge; play would get stuck there",
            v + 1
        ))),
    }
}

/// The set of vertices from which some vertex in `targets` is reachable,
/// including the targets themselves. Returned as a mask over vertex ids.
pub fn reachable_to(g: &Digraph, targets: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; g.n()];
    let inc = g.in_edge_ids();
    let mut stack = Vec::new();
    for &t in targets {
        if !mask[t] {
            mask[t] = true;
            stack.push(t);
        }
    }
    while let Some(v) = stack.pop() {
        for &eid in &inc[v] {
            let u = g.edges()[eid].from;
            if !mask[u] {
                mask[u] = true;
                stack.push(u);
            }
        }
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_vertex_ids() {
        assert!(Digraph::from_list(2, &[(0, 2, 1)]).is_err());
        assert!(Digraph::from_list(2, &[(2, 0, 1)]).is_err());
        assert!(Digraph::from_list(3, &[(0, 2, 1), (2, 1, -1)]).is_ok());
    }

    #[test]
    fn validate_accepts_playable_game() {
        let g = GameGraph::from_list(
            2,
            &[(0, 1, -1), (1, 0, 1)],
            &[Owner::Alice, Owner::Alice],
            1,
        )
        .unwrap();
        assert!(validate_game(&g).is_empty());
    }

    #[test]
    fn validate_reports_isolated_vertex() {
        let g = GameGraph::from_list(2, &[(0, 0, 0)], &[Owner::Alice, Owner::Bob], 1).unwrap();
        assert_eq!(validate_game(&g), vec![Violation::NoOutEdge(1)]);
    }

    #[test]
    fn validate_reports_weight_outside_bound() {
        let g = GameGraph::from_list(1, &[(0, 0, -3)], &[Owner::Bob], 2).unwrap();
        assert_eq!(
            validate_game(&g),
            vec![Violation::WeightOutOfRange {
                edge: 0,
                weight: -3,
                bound: 2
            }]
        );
    }

    #[test]
    fn reachable_to_walks_edges_backwards() {
        // 0 -> 1 -> 2, 3 isolated
        let g = Digraph::from_list(4, &[(0, 1, 0), (1, 2, 0)]).unwrap();
        assert_eq!(reachable_to(&g, &[2]), vec![true, true, true, false]);
        assert_eq!(reachable_to(&g, &[1]), vec![true, true, false, false]);
        assert_eq!(reachable_to(&g, &[3]), vec![false, false, false, true]);
    }

    #[test]
    fn reachable_to_includes_targets() {
        let g = Digraph::from_list(2, &[(0, 1, 5)]).unwrap();
        let mask = reachable_to(&g, &[0]);
        assert!(mask[0]);
        assert!(!mask[1]);
    }

    #[test]
    fn owner_count_must_match() {
        let d = Digraph::from_list(2, &[(0, 1, 0), (1, 0, 0)]).unwrap();
        assert!(GameGraph::new(d, vec![Owner::Alice], 1).is_err());
    }

    #[test]
    fn weight_bound_overflow_is_rejected() {
        let d = Digraph::from_list(4, &[]).unwrap();
        assert!(GameGraph::new(d, vec![Owner::Alice; 4], i64::MAX / 2).is_err());
    }
}
