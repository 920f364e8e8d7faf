//! Strongly connected components via Tarjan's algorithm, iterative to keep
//! deep graphs off the call stack.

use crate::graph::Digraph;

/// The strongly connected components of a digraph.
///
/// Components are emitted in reverse topological order (a component comes
/// before everything that can reach it), members of each component are
/// sorted ascending, and `dag` lists component successors induced by the
/// original edges, deduplicated and sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SccDecomposition {
    pub components: Vec<Vec<usize>>,
    pub comp_of: Vec<usize>,
    pub dag: Vec<Vec<usize>>,
}

pub fn scc(g: &Digraph) -> SccDecomposition {
    let n = g.n();
    let out = g.out_edge_ids();
    let edges = g.edges();

    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut comp_of = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut next_index = 0usize;

    // (vertex, position in its out-edge list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, 0));

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < out[v].len() {
                let w = edges[out[v][*pos]].to;
                *pos += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let id = components.len();
                    let mut members = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp_of[w] = id;
                        members.push(w);
                        if w == v {
                            break;
                        }
                    }
                    members.sort_unstable();
                    components.push(members);
                }
            }
        }
    }

    let mut dag = vec![Vec::new(); components.len()];
    for e in edges {
        let (cf, ct) = (comp_of[e.from], comp_of[e.to]);
        if cf != ct {
            dag[cf].push(ct);
        }
    }
    for succ in &mut dag {
        succ.sort_unstable();
        succ.dedup();
    }

    SccDecomposition {
        components,
        comp_of,
        dag,
    }
}
