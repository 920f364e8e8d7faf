//! Seeded instance generators. All of them are deterministic functions of
//! their arguments, so the same seed always reproduces the same instance.

use rand_chacha::ChaCha8Rng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::{Digraph, GameGraph, Owner};
use crate::sssp::find_negative_cycle;

fn check_params(n: usize, m: usize, w_max: i64, owner_bias: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one vertex".into()));
    }
    if m < n {
        return Err(Error::InvalidParameter(format!(
            "m = {m} < n = {n}: cannot give every vertex an outgoing edge"
        )));
    }
    if w_max < 1 {
        return Err(Error::InvalidParameter(format!(
            "weight bound W = {w_max} must be at least 1"
        )));
    }
    if !(0.0..=1.0).contains(&owner_bias) {
        return Err(Error::InvalidParameter(format!(
            "owner bias {owner_bias} outside [0, 1]"
        )));
    }
    Ok(())
}

fn draw_owners(rng: &mut ChaCha8Rng, n: usize, owner_bias: f64) -> Vec<Owner> {
    (0..n)
        .map(|_| {
            if rng.gen_bool(owner_bias) {
                Owner::Alice
            } else {
                Owner::Bob
            }
        })
        .collect()
}

/// Uniform random game graph. The first `n` edges give every vertex one
/// outgoing edge; the rest have uniform endpoints. Weights are uniform in
/// `[-W, W]` and each vertex belongs to Alice with probability
/// `owner_bias`.
pub fn gen_random(
    n: usize,
    m: usize,
    w_max: i64,
    owner_bias: f64,
    seed: u64,
) -> Result<GameGraph> {
    check_params(n, m, w_max, owner_bias)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let owners = draw_owners(&mut rng, n, owner_bias);
    let mut edges = Vec::with_capacity(m);
    for v in 0..n {
        edges.push((v, rng.gen_range(0..n), rng.gen_range(-w_max..=w_max)));
    }
    for _ in n..m {
        edges.push((
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(-w_max..=w_max),
        ));
    }
    GameGraph::new(Digraph::from_list(n, &edges)?, owners, w_max)
}

/// Random game graph guaranteed to contain no negative cycle.
///
/// Weights come from a random vertex potential: `w(u, v)` is
/// `p(u) - p(v) + c` with `c >= 0`, clamped into `[-W, W]`. The clamp can
/// only lower a weight to `W >= p(u) - p(v)`, so every edge keeps
/// `w(u, v) >= p(u) - p(v)` and every cycle telescopes to a nonnegative
/// total. The guarantee is re-checked before returning.
pub fn gen_no_neg_cycle(
    n: usize,
    m: usize,
    w_max: i64,
    owner_bias: f64,
    seed: u64,
) -> Result<GameGraph> {
    check_params(n, m, w_max, owner_bias)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let owners = draw_owners(&mut rng, n, owner_bias);
    let potential: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=w_max)).collect();
    let mut edges = Vec::with_capacity(m);
    let push = |rng: &mut ChaCha8Rng, u: usize, v: usize| {
        let slack = rng.gen_range(0..=w_max);
        let w = (potential[u] - potential[v] + slack).clamp(-w_max, w_max);
        (u, v, w)
    };
    for u in 0..n {
        let v = rng.gen_range(0..n);
        let e = push(&mut rng, u, v);
        edges.push(e);
    }
    for _ in n..m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let e = push(&mut rng, u, v);
        edges.push(e);
    }
    let g = GameGraph::new(Digraph::from_list(n, &edges)?, owners, w_max)?;
    if let Some(c) = find_negative_cycle(g.digraph()) {
        return Err(Error::Internal(format!(
            "potential-based generator produced a negative cycle through {:?}",
            c.vertices
        )));
    }
    Ok(g)
}

/// Complete digraph on `n` vertices (every ordered pair, no self-loops)
/// with uniform weights in `[-W, W]`. All vertices belong to Alice.
pub fn gen_complete(n: usize, w_max: i64, seed: u64) -> Result<GameGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one vertex".into()));
    }
    if w_max < 1 {
        return Err(Error::InvalidParameter(format!(
            "weight bound W = {w_max} must be at least 1"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1));
    for u in 0..n {
        for v in 0..n {
            if u != v {
                edges.push((u, v, rng.gen_range(-w_max..=w_max)));
            }
        }
    }
    GameGraph::new(
        Digraph::from_list(n, &edges)?,
        vec![Owner::Alice; n],
        w_max,
    )
}
