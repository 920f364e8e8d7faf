//! Solvers for energy games on weighted directed graphs.
//!
//! Alice moves at her vertices to keep the running sum of edge weights,
//! offset by an initial credit, nonnegative forever; Bob moves at his to
//! exhaust it. Every vertex has a least sufficient credit, possibly
//! infinite, and this crate computes it exactly:
//!
//! * [`finite::solve_fixpoint`] for arbitrary games,
//! * [`finite::solve_no_neg_cycles`] when no cycle has negative weight,
//! * [`alice::solve_all_alice`] and [`bob::solve_all_bob`] for one-player
//!   games, both polynomial,
//! * [`finite::brute_force`] as an exponential cross-check.
//!
//! The module [`apnp`] answers all-pairs reachability along walks whose
//! running weight never dips below zero, the engine behind the all-Alice
//! solver, and [`reductions`] ties its hardness to negative-triangle
//! detection.

pub mod alice;
pub mod apnp;
pub mod bob;
pub mod cycles;
pub mod energy;
pub mod error;
pub mod finite;
pub mod gen;
pub mod graph;
pub mod instance;
pub mod matrix;
pub mod reductions;
pub mod scc;
pub mod sssp;

pub use energy::{Energy, EnergyFunction};
pub use error::{Error, Result};
pub use graph::{reachable_to, validate_game, Digraph, Edge, GameGraph, Owner, Violation};
pub use matrix::ReachMatrix;
