//! Exhaustive simple-cycle enumeration. Exponential in the graph size;
//! meant for cross-checking solvers on small instances, not for
//! production-sized graphs.

use crate::graph::Digraph;

/// Every simple directed cycle, each as the sequence of its edge ids in
/// traversal order. Parallel edges yield distinct cycles. Each cycle is
/// listed once, rooted at its smallest vertex.
pub fn enumerate_simple_cycles(g: &Digraph) -> Vec<Vec<usize>> {
    let out = g.out_edge_ids();
    let edges = g.edges();
    let mut acc = Vec::new();
    let mut visited = vec![false; g.n()];
    let mut path: Vec<usize> = Vec::new();

    fn dfs(
        v: usize,
        start: usize,
        out: &[Vec<usize>],
        edges: &[crate::graph::Edge],
        visited: &mut [bool],
        path: &mut Vec<usize>,
        acc: &mut Vec<Vec<usize>>,
    ) {
        for &eid in &out[v] {
            let t = edges[eid].to;
            if t == start {
                path.push(eid);
                acc.push(path.clone());
                path.pop();
            } else if t > start && !visited[t] {
                visited[t] = true;
                path.push(eid);
                dfs(t, start, out, edges, visited, path, acc);
                path.pop();
                visited[t] = false;
            }
        }
    }

    for start in 0..g.n() {
        visited[start] = true;
        dfs(start, start, &out, edges, &mut visited, &mut path, &mut acc);
        visited[start] = false;
    }
    acc
}

pub fn cycle_weight(g: &Digraph, cycle: &[usize]) -> i64 {
    cycle.iter().map(|&eid| g.edges()[eid].weight).sum()
}

pub fn cycle_vertices(g: &Digraph, cycle: &[usize]) -> Vec<usize> {
    cycle.iter().map(|&eid| g.edges()[eid].from).collect()
}

/// True when some rotation of the cycle has every prefix sum nonnegative.
pub fn has_nonneg_prefix_rotation(g: &Digraph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    'rotation: for r in 0..len {
        let mut sum = 0i64;
        for k in 0..len {
            sum += g.edges()[cycle[(r + k) % len]].weight;
            if sum < 0 {
                continue 'rotation;
            }
        }
        return true;
    }
    false
}
