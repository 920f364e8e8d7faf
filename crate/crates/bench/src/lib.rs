//! Benchmark-only crate; see `benches/solvers.rs`. Instance construction
//! lives here so the benches measure solving, not generation.

use egsolve_core::gen::{gen_no_neg_cycle, gen_random};
use egsolve_core::GameGraph;

pub fn mixed_no_neg_cycle(n: usize, m: usize, w: i64, seed: u64) -> GameGraph {
    gen_no_neg_cycle(n, m, w, 0.5, seed).expect("benchmark parameters are valid")
}

pub fn all_bob(n: usize, m: usize, w: i64, seed: u64) -> GameGraph {
    gen_random(n, m, w, 0.0, seed).expect("benchmark parameters are valid")
}

pub fn mixed(n: usize, m: usize, w: i64, seed: u64) -> GameGraph {
    gen_random(n, m, w, 0.5, seed).expect("benchmark parameters are valid")
}
