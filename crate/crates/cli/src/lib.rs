//! Command implementations behind the `egsolve` binary.
//!
//! Each command reads the instance format of `egsolve_core::instance`,
//! produces its output as a string for standard output, and reports
//! problems through `egsolve_core::Error` so the binary can map them to
//! exit codes: 2 for malformed input or parameters, 3 for violated solver
//! preconditions, 1 for everything unexpected.

use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use egsolve_core::apnp::{apnp, apnp_oracle};
use egsolve_core::alice::solve_all_alice;
use egsolve_core::bob::solve_all_bob;
use egsolve_core::finite::{
    brute_force_with_budget, solve_fixpoint, solve_no_neg_cycles, value_iteration,
    DEFAULT_STRATEGY_BUDGET,
};
use egsolve_core::gen::{gen_complete, gen_no_neg_cycle, gen_random};
use egsolve_core::instance::{
    parse_instance, serialize_instance, write_energies, write_reach_matrix,
};
use egsolve_core::reductions::{brute_force_neg_triangle, has_negative_triangle_via_apnp};
use egsolve_core::{validate_game, Error, GameGraph, Owner, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum SolveAlgo {
    /// Pick a solver from the owner structure
    Auto,
    /// Polynomial solver for games owned entirely by Alice
    AllAlice,
    /// Polynomial solver for games owned entirely by Bob
    AllBob,
    /// n improvement sweeps; exact when no cycle is negative
    NoNegCycle,
    /// Iterate improvement sweeps to the exact fixpoint
    Fixpoint,
    /// Exhaust positional strategy pairs
    Brute,
    /// A fixed number of improvement sweeps (requires --rounds)
    Rounds,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum ApnpAlgo {
    /// Gadget expansion plus saturation of the bracket-matching relation
    Dyck,
    /// Direct search over (vertex, accumulated weight) states
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum GenType {
    /// Uniform edges, weights and owners
    Random,
    /// Potential-shaped weights; no negative cycle, mixed owners
    NoNegCycle,
    /// Uniform instance owned entirely by Alice
    AllAlice,
    /// Uniform instance owned entirely by Bob
    AllBob,
    /// Complete digraph for triangle detection; --m is ignored
    NegTriangle,
}

/// Reads the whole instance text from a file, or standard input when no
/// path is given.
pub fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Error::Internal(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Internal(format!("cannot read standard input: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse_valid_game(text: &str) -> Result<GameGraph> {
    let g = parse_instance(text)?;
    let violations = validate_game(&g);
    if !violations.is_empty() {
        let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::InvalidParameter(format!(
            "invalid instance: {}",
            list.join("; ")
        )));
    }
    Ok(g)
}

pub fn cmd_solve(
    algo: SolveAlgo,
    rounds: Option<usize>,
    verify: bool,
    budget: Option<u64>,
    text: &str,
) -> Result<String> {
    match (algo, rounds) {
        (SolveAlgo::Rounds, None) => {
            return Err(Error::InvalidParameter(
                "--algo rounds requires --rounds".into(),
            ))
        }
        (SolveAlgo::Rounds, Some(_)) => {}
        (_, Some(_)) => {
            return Err(Error::InvalidParameter(
                "--rounds only applies to --algo rounds".into(),
            ))
        }
        (_, None) => {}
    }
    if verify && algo != SolveAlgo::NoNegCycle {
        return Err(Error::InvalidParameter(
            "--verify only applies to --algo no-neg-cycle".into(),
        ));
    }
    if budget.is_some() && algo != SolveAlgo::Brute {
        return Err(Error::InvalidParameter(
            "--budget only applies to --algo brute".into(),
        ));
    }

    let g = parse_valid_game(text)?;
    let energies = match algo {
        SolveAlgo::Auto => {
            if g.all_owned_by(Owner::Alice) {
                solve_all_alice(&g)?
            } else if g.all_owned_by(Owner::Bob) {
                solve_all_bob(&g)?
            } else {
                solve_fixpoint(&g)?
            }
        }
        SolveAlgo::AllAlice => solve_all_alice(&g)?,
        SolveAlgo::AllBob => solve_all_bob(&g)?,
        SolveAlgo::NoNegCycle => solve_no_neg_cycles(&g, verify)?,
        SolveAlgo::Fixpoint => solve_fixpoint(&g)?,
        SolveAlgo::Brute => {
            brute_force_with_budget(&g, budget.unwrap_or(DEFAULT_STRATEGY_BUDGET))?
        }
        SolveAlgo::Rounds => value_iteration(&g, rounds.expect("checked above"))?,
    };
    Ok(write_energies(&energies))
}

/// All-pairs reachability along walks whose running weight never goes
/// negative. Owners are irrelevant here, and vertices without outgoing
/// edges are fine, so only the parse is validated.
pub fn cmd_apnp(algo: ApnpAlgo, text: &str) -> Result<String> {
    let g = parse_instance(text)?;
    let reach = match algo {
        ApnpAlgo::Dyck => apnp(g.digraph(), g.max_weight())?,
        ApnpAlgo::Oracle => apnp_oracle(g.digraph(), g.max_weight()),
    };
    Ok(write_reach_matrix(&reach))
}

pub fn cmd_gen(
    ty: GenType,
    n: usize,
    m: usize,
    w: i64,
    seed: u64,
    owner_bias: Option<f64>,
) -> Result<String> {
    if owner_bias.is_some() && !matches!(ty, GenType::Random | GenType::NoNegCycle) {
        return Err(Error::InvalidParameter(
            "--owner-bias only applies to --type random and --type no-neg-cycle".into(),
        ));
    }
    let bias = owner_bias.unwrap_or(0.5);
    let g = match ty {
        GenType::Random => gen_random(n, m, w, bias, seed)?,
        GenType::NoNegCycle => gen_no_neg_cycle(n, m, w, bias, seed)?,
        GenType::AllAlice => gen_random(n, m, w, 1.0, seed)?,
        GenType::AllBob => gen_random(n, m, w, 0.0, seed)?,
        GenType::NegTriangle => gen_complete(n, w, seed)?,
    };
    Ok(serialize_instance(&g))
}

/// Runs the layered-reachability triangle detector and the cubic scan,
/// failing when they disagree.
pub fn cmd_check_reduction(text: &str) -> Result<String> {
    let g = parse_instance(text)?;
    let via_reach = has_negative_triangle_via_apnp(g.digraph())?;
    let via_scan = brute_force_neg_triangle(g.digraph());
    if via_reach != via_scan {
        return Err(Error::Internal(format!(
            "detectors disagree: reachability says {via_reach}, triple scan says {via_scan}"
        )));
    }
    let word = |b: bool| if b { "yes" } else { "no" };
    Ok(format!(
        "negative triangle via reachability: {}\n\
         negative triangle via triple scan: {}\n\
         agreement: yes\n",
        word(via_reach),
        word(via_scan)
    ))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum BenchAlgo {
    /// Improvement sweeps on a random instance
    ValueIteration,
    /// The polynomial all-Bob solver
    AllBob,
    /// The prefix-safe reachability pipeline
    Apnp,
}

/// One measurement: setup excluded, `millis` is the median over the
/// requested runs. `iterations` echoes the sweep count where the algorithm
/// has one, and is 1 otherwise.
pub struct BenchRow {
    pub algo: &'static str,
    pub n: usize,
    pub m: usize,
    pub w: i64,
    pub millis: f64,
    pub iterations: usize,
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {:.3} {}",
            self.algo, self.n, self.m, self.w, self.millis, self.iterations
        )
    }
}

/// Median wall time of `body` over `runs` executions, in milliseconds.
pub fn median_run_ms<F: FnMut() -> Result<()>>(runs: usize, mut body: F) -> Result<f64> {
    let runs = runs.max(1);
    let mut times = Vec::with_capacity(runs);
    for _ in 0..runs {
        let t = Instant::now();
        body()?;
        times.push(t.elapsed().as_secs_f64() * 1e3);
    }
    times.sort_by(f64::total_cmp);
    Ok(if runs % 2 == 1 {
        times[runs / 2]
    } else {
        (times[runs / 2 - 1] + times[runs / 2]) / 2.0
    })
}

pub fn bench_value_iteration(
    n: usize,
    m: usize,
    w: i64,
    rounds: usize,
    seed: u64,
    runs: usize,
) -> Result<BenchRow> {
    let g = gen_random(n, m, w, 0.5, seed)?;
    let millis = median_run_ms(runs, || value_iteration(&g, rounds).map(|_| ()))?;
    Ok(BenchRow {
        algo: "value-iteration",
        n,
        m,
        w,
        millis,
        iterations: rounds,
    })
}

pub fn bench_all_bob(n: usize, m: usize, w: i64, seed: u64, runs: usize) -> Result<BenchRow> {
    let g = gen_random(n, m, w, 0.0, seed)?;
    let millis = median_run_ms(runs, || solve_all_bob(&g).map(|_| ()))?;
    Ok(BenchRow {
        algo: "all-bob",
        n,
        m,
        w,
        millis,
        iterations: 1,
    })
}

pub fn bench_apnp(n: usize, m: usize, w: i64, seed: u64, runs: usize) -> Result<BenchRow> {
    let g = gen_random(n, m, w, 0.5, seed)?;
    let millis = median_run_ms(runs, || apnp(g.digraph(), w).map(|_| ()))?;
    Ok(BenchRow {
        algo: "apnp",
        n,
        m,
        w,
        millis,
        iterations: 1,
    })
}

/// Runs the cartesian schedule of sizes and formats one row per
/// measurement, preceded by a header line.
#[allow(clippy::too_many_arguments)]
pub fn cmd_bench(
    algo: BenchAlgo,
    ns: &[usize],
    ms: &[usize],
    rounds: Option<&[usize]>,
    w: i64,
    seed: u64,
    runs: usize,
) -> Result<String> {
    if rounds.is_some() && algo != BenchAlgo::ValueIteration {
        return Err(Error::InvalidParameter(
            "--rounds only applies to --algo value-iteration".into(),
        ));
    }
    if ns.is_empty() || ms.is_empty() {
        return Err(Error::InvalidParameter(
            "--n and --m need at least one value".into(),
        ));
    }
    let mut out = String::from("algo n m W time_ms iterations\n");
    for &n in ns {
        for &m in ms {
            match algo {
                BenchAlgo::ValueIteration => {
                    let schedule: Vec<usize> = match rounds {
                        Some(r) => r.to_vec(),
                        None => vec![n],
                    };
                    for r in schedule {
                        let row = bench_value_iteration(n, m, w, r, seed, runs)?;
                        out.push_str(&row.to_string());
                        out.push('\n');
                    }
                }
                BenchAlgo::AllBob => {
                    let row = bench_all_bob(n, m, w, seed, runs)?;
                    out.push_str(&row.to_string());
                    out.push('\n');
                }
                BenchAlgo::Apnp => {
                    let row = bench_apnp(n, m, w, seed, runs)?;
                    out.push_str(&row.to_string());
                    out.push('\n');
                }
            }
        }
    }
    Ok(out)
}

/// Exit code for an error: 2 for input and parameter problems, 3 for
/// violated preconditions, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::InvalidParameter(_) => 2,
        Error::Precondition(_) => 3,
        Error::Internal(_) => 1,
    }
}

/// Convenience used by the binary: `--in` paths stay optional.
pub fn input_path(p: &Option<PathBuf>) -> Option<&Path> {
    p.as_deref()
}
