use std::path::PathBuf;

use clap::{Parser, Subcommand};
use egsolve_cli::{
    cmd_apnp, cmd_bench, cmd_check_reduction, cmd_gen, cmd_solve, exit_code, input_path,
    read_input, ApnpAlgo, BenchAlgo, GenType, SolveAlgo,
};
use egsolve_core::Result;

/// Exact solvers for energy games on weighted directed graphs.
///
/// Instances are plain text: a `p eg <n> <m> <W>` header, optional
/// `o <v> <A|B>` owner lines (Alice by default), and `e <u> <v> <w>` edge
/// lines with 1-based vertex ids. Results go to standard output,
/// diagnostics to standard error.
#[derive(Parser)]
#[command(name = "egsolve", version, about, verbatim_doc_comment)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the minimum sufficient energy of every vertex
    Solve {
        /// Solver to run
        #[arg(long, value_enum, default_value_t = SolveAlgo::Auto)]
        algo: SolveAlgo,
        /// Sweep count for --algo rounds
        #[arg(long)]
        rounds: Option<usize>,
        /// Check the no-negative-cycle precondition before solving
        #[arg(long)]
        verify: bool,
        /// Strategy-pair cap for --algo brute
        #[arg(long)]
        budget: Option<u64>,
        /// Instance file; standard input when omitted
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
    },
    /// All-pairs reachability along nonnegative-prefix walks
    Apnp {
        #[arg(long, value_enum)]
        algo: ApnpAlgo,
        /// Instance file; standard input when omitted
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
    },
    /// Emit a random instance
    Gen {
        #[arg(long = "type", value_enum)]
        ty: GenType,
        /// Vertex count
        #[arg(long)]
        n: usize,
        /// Edge count (at least n; ignored by --type neg-triangle)
        #[arg(long)]
        m: usize,
        /// Weight bound: weights are drawn from [-W, W]
        #[arg(long = "W")]
        w: i64,
        #[arg(long)]
        seed: u64,
        /// Probability that a vertex belongs to Alice (default 0.5)
        #[arg(long)]
        owner_bias: Option<f64>,
    },
    /// Time a solver over a schedule of instance sizes
    Bench {
        #[arg(long, value_enum)]
        algo: BenchAlgo,
        /// Vertex counts, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Edge counts, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<usize>,
        /// Sweep counts for value-iteration (defaults to n)
        #[arg(long, value_delimiter = ',')]
        rounds: Option<Vec<usize>>,
        #[arg(long = "W", default_value_t = 5)]
        w: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Runs per measurement; the median is reported
        #[arg(long, default_value_t = 5)]
        runs: usize,
    },
    /// Run both negative-triangle detectors and compare them
    CheckReduction {
        /// Instance file; standard input when omitted
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<String> {
    match cli.cmd {
        Cmd::Solve {
            algo,
            rounds,
            verify,
            budget,
            input,
        } => {
            let text = read_input(input_path(&input))?;
            cmd_solve(algo, rounds, verify, budget, &text)
        }
        Cmd::Apnp { algo, input } => {
            let text = read_input(input_path(&input))?;
            cmd_apnp(algo, &text)
        }
        Cmd::Gen {
            ty,
            n,
            m,
            w,
            seed,
            owner_bias,
        } => cmd_gen(ty, n, m, w, seed, owner_bias),
        Cmd::Bench {
            algo,
            n,
            m,
            rounds,
            w,
            seed,
            runs,
        } => cmd_bench(algo, &n, &m, rounds.as_deref(), w, seed, runs),
        Cmd::CheckReduction { input } => {
            let text = read_input(input_path(&input))?;
            cmd_check_reduction(&text)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}
