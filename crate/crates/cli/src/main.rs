mod commands;
mod input;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use swk_core::extremal::ProblemMode;

use commands::{Method, Outcome, Output};
use input::{load_graph, parse_list, render_graph, GraphFormat};

const AFTER_HELP: &str = "\
GRAPH is a file or a generator. Files hold JSON {\"n\": 4, \"edges\": [[0,1],[1,2],[2,3]]}
or an edge list: a line \"n m\" then m lines \"u v\" (0-based, # starts a comment).
Generators: path:N, star:N, complete:N, windmill:R,T, path-like:B1,B2,..,
star-like:B1,B2,.., caterpillar:D1,D2,.., random:MAX_ORDER[,MAX_BLOCK] (uses --seed).

CSV columns: scan writes canonical_id,sw_k,is_star_like,is_path_like;
problems writes canonical_id,sw_k,is_greedy,is_caterpillar. Values are exact decimal integers.

Exit status: 0 success, 1 input error, 2 guard exceeded, 3 agreement failure.";

#[derive(Parser, Debug)]
#[command(name = "swk", version, about = "Steiner k-Wiener index of block graphs", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write a JSON report here.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Write CSV rows here (scan, problems).
    #[arg(long, global = true)]
    csv: Option<PathBuf>,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest C(n, k) an exhaustive method may visit.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    oracle_guard: u128,
    /// Leave timings out of reports, making them byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate SW_k with one method.
    Compute {
        graph: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Run every applicable method for k = 2..=kmax and check they agree.
    Compare {
        graph: String,
        #[arg(long)]
        kmax: usize,
    },
    /// Min and max of SW_k over all block graphs with the given block orders.
    Scan {
        /// Block orders, e.g. 3,2,2.
        #[arg(long)]
        orders: String,
        #[arg(long)]
        k: usize,
        /// Most partial graphs kept per enumeration stage.
        #[arg(long, default_value_t = 100_000)]
        limit: usize,
    },
    /// Greedy tree and caterpillar checks over all trees with a degree sequence.
    Problems {
        /// Degree sequence, e.g. 3,2,1,1,1.
        #[arg(long)]
        degrees: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Mode::Trees)]
        mode: Mode,
    },
    /// Print a graph in one of the input formats.
    Emit {
        graph: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Trees,
    LineGraphs,
}

fn run(cli: Cli) -> Outcome {
    let out = Output {
        json: cli.json,
        csv: cli.csv,
        timing: !cli.no_timing,
        oracle_guard: cli.oracle_guard,
    };
    match cli.command {
        Command::Compute { graph, k, method } => {
            let g = load_graph(&graph, cli.seed)?;
            commands::compute(&g, &graph, k, method, &out)
        }
        Command::Compare { graph, kmax } => {
            let g = load_graph(&graph, cli.seed)?;
            commands::compare(&g, &graph, kmax, &out)
        }
        Command::Scan { orders, k, limit } => commands::scan(&parse_list(&orders)?, k, limit, &out),
        Command::Problems { degrees, k, mode } => {
            let mode = match mode {
                Mode::Trees => ProblemMode::Trees,
                Mode::LineGraphs => ProblemMode::LineGraphs,
            };
            commands::problems(&parse_list(&degrees)?, k, mode, &out)
        }
        Command::Emit {
            graph,
            format,
            out: path,
        } => {
            let text = render_graph(&load_graph(&graph, cli.seed)?, format)?;
            match path {
                Some(p) => {
                    fs::write(&p, text).with_context(|| format!("cannot write {}", p.display()))?
                }
                None => print!("{text}"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("swk: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
