//! Reduction from negative-triangle detection to prefix-safe reachability.
//!
//! A weighted digraph has a negative triangle exactly when the layered graph
//! built here admits a walk with nonnegative prefix sums between one of the
//! listed query pairs. The construction certifies that the reachability
//! computation in [`crate::apnp`] carries the full difficulty of triangle
//! detection, which has no known truly subcubic algorithm.

use crate::apnp::apnp;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge};

/// Builds the layered instance and its query pairs.
///
/// Five copies of the vertex set are stacked; each original edge `(u,v,w)`
/// runs between consecutive layers 1..4 with weight `-w`, and a final
/// per-vertex edge drops from layer 4 to layer 5 at weight `-1`. A
/// prefix-safe walk from `v` in layer 1 to `v` in layer 5 negates a closed
/// triangle through `v`, and the trailing `-1` insists its weight was
/// strictly negative. Querying every `v` covers every rotation, and some
/// rotation of a negative triangle is prefix-safe after negation.
///
/// Self-loops would masquerade as degenerate triangles, so they are
/// rejected.
pub fn neg_triangle_to_apnp(g: &Digraph) -> Result<(Digraph, Vec<(usize, usize)>)> {
    if let Some(e) = g.edges().iter().find(|e| e.from == e.to) {
        return Err(Error::Precondition(format!(
            "self-loop at vertex {}; triangle detection needs a loop-free graph",
            e.from + 1
        )));
    }
    let n = g.n();
    let id = |v: usize, layer: usize| (layer - 1) * n + v;
    let mut edges = Vec::with_capacity(3 * g.edge_count() + n);
    for layer in 1..=3 {
        for e in g.edges() {
            edges.push(Edge::new(id(e.from, layer), id(e.to, layer + 1), -e.weight));
        }
    }
    for v in 0..n {
        edges.push(Edge::new(id(v, 4), id(v, 5), -1));
    }
    let layered = Digraph::new(5 * n, edges)?;
    let queries = (0..n).map(|v| (id(v, 1), id(v, 5))).collect();
    Ok((layered, queries))
}

/// Decides whether `g` contains a directed triangle of negative total
/// weight by running the prefix-safe reachability solver on the layered
/// instance.
pub fn has_negative_triangle_via_apnp(g: &Digraph) -> Result<bool> {
    let (layered, queries) = neg_triangle_to_apnp(g)?;
    let bound = g
        .edges()
        .iter()
        .map(|e| e.weight.abs())
        .max()
        .unwrap_or(0)
        .max(1);
    let reach = apnp(&layered, bound)?;
    Ok(queries.iter().any(|&(s, t)| reach.get(s, t)))
}

/// Reference answer by scanning all ordered vertex triples, using the
/// lightest edge between each ordered pair.
pub fn brute_force_neg_triangle(g: &Digraph) -> bool {
    let n = g.n();
    let mut min_w = vec![None::<i64>; n * n];
    for e in g.edges() {
        if e.from == e.to {
            continue;
        }
        let slot = &mut min_w[e.from * n + e.to];
        *slot = Some(slot.map_or(e.weight, |w: i64| w.min(e.weight)));
    }
    for a in 0..n {
        for b in 0..n {
            if b == a {
                continue;
            }
            let ab = match min_w[a * n + b] {
                Some(w) => w,
                None => continue,
            };
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                if let (Some(bc), Some(ca)) = (min_w[b * n + c], min_w[c * n + a]) {
                    if ab + bc + ca < 0 {
                        return true;
                    }
                }
            }
        }
    }
    false
}
