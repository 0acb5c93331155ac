//! Command-line front end. Every command reads plain files or flags, writes
//! a single JSON, CSV, LP, or edge-list payload, and signals structured
//! failure as a JSON error object on stdout plus a nonzero exit code:
//! 2 for bad input, 3 for size guards, 4 for internal invariant violations.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bench::{mean_greedy_ratio, run_benchmark, to_csv_string, BenchParams};
use crate::bounds::{greedy_upper_bound, jensen_whole_graph_bound, relaxation_bound};
use crate::cost::{sequence_cost, CostFunction};
use crate::error::{Error, Result};
use crate::exact::{brute_force_optimal, dp_optimal_nanip};
use crate::expectation::{
    expected_cost_exact, expected_cost_monte_carlo, expected_cost_upper, ErModel,
};
use crate::generate::{gen_gnp, gen_random_connected, gen_random_tree};
use crate::graph::Graph;
use crate::heuristics::{degree_descending, greedy, random_sequence};
use crate::ip::build_ip;
use crate::seed::Seed;

#[derive(Parser)]
#[command(
    name = "nanip",
    version,
    about = "Sequencing-cost toolkit: exact solvers, heuristics, bounds, and benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    /// Exact optimum by subset dynamic programming (n <= 26).
    Dp,
    /// Exact optimum by permutation enumeration (n <= 10).
    Brute,
    /// Cost-greedy heuristic with random tie breaks.
    Greedy,
    /// Descending-degree order.
    Degree,
    /// Uniformly random order.
    Random,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::Dp => "dp",
            Algorithm::Brute => "brute",
            Algorithm::Greedy => "greedy",
            Algorithm::Degree => "degree",
            Algorithm::Random => "random",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    /// Uniform random labeled tree.
    Tree,
    /// Connected graph with an exact edge count.
    Connected,
    /// Erdos-Renyi G(n, p).
    Gnp,
}

#[derive(Subcommand)]
enum Command {
    /// Find or sample an installation sequence and report its cost.
    Solve {
        /// Edge-list file, one "u v" pair per line.
        #[arg(long)]
        graph: PathBuf,
        /// Cost spec: reciprocal:<a>, linear:<a>,<b>, indicator, or table:<path>.
        #[arg(long)]
        cost: String,
        #[arg(long, value_enum)]
        alg: Algorithm,
        /// Seed for the randomized algorithms; ignored by the others.
        #[arg(long, default_value_t = 42)]
        seed: Seed,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate analytic lower bounds and the greedy upper bound.
    Bound {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cost: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep random connected graphs, comparing the optimum, heuristics, and
    /// bounds; emits per-instance CSV and a JSON summary line.
    #[command(name = "bench-fig3")]
    BenchFig3 {
        #[arg(long, default_value_t = 15)]
        n: usize,
        /// First edge count of the grid; defaults to n-1.
        #[arg(long)]
        m_start: Option<usize>,
        /// Last edge count of the grid; defaults to n(n-1)/2.
        #[arg(long)]
        m_end: Option<usize>,
        #[arg(long, default_value_t = 7)]
        m_step: usize,
        #[arg(long, default_value_t = 5)]
        instances: usize,
        /// Greedy and random repetitions per instance.
        #[arg(long, default_value_t = 10)]
        runs: usize,
        #[arg(long, default_value = "reciprocal:1")]
        cost: String,
        #[arg(long, default_value_t = 42)]
        seed: Seed,
        /// Write the CSV here; the summary then goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit the records as a JSON array instead of CSV.
        #[arg(long)]
        json: bool,
    },
    /// Expected cost of a fixed installation order on G(n, p).
    ExpectedCost {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        cost: String,
        /// Also run this many Monte Carlo trials.
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 42)]
        seed: Seed,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random graph and write its edge list.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// Edge count; required for kind connected.
        #[arg(long)]
        m: Option<usize>,
        /// Edge probability; required for kind gnp.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 42)]
        seed: Seed,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the graph and cost as an integer program in LP file format.
    ExportIp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cost: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Entry point for the binary; returns the process exit code. Failures are
/// reported as a single JSON object on stdout so scripted callers never have
/// to scrape log text.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| dispatch(cli.command)) {
        Ok(()) => 0,
        Err(e) => {
            let payload = json!({
                "schema": 1,
                "error": {"kind": e.kind(), "message": e.to_string()},
            });
            println!("{payload}");
            e.exit_code()
        }
    }
}

/// NANIP_THREADS caps the rayon pool; 0 or unset keeps the default (one
/// thread per core).
fn configure_threads() -> Result<()> {
    match std::env::var("NANIP_THREADS") {
        Err(_) => Ok(()),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(0) => Ok(()),
            Ok(k) => {
                // A failure here means a pool already exists, which only
                // happens when run() is invoked twice in one process.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
                Ok(())
            }
            Err(_) => Err(Error::InvalidInput(format!(
                "NANIP_THREADS must be a nonnegative integer, got '{raw}'"
            ))),
        },
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| {
        Error::InvalidInput(format!("cannot read graph file '{}': {e}", path.display()))
    })?;
    Graph::parse_edge_list(&text)
}

/// Writes `content` verbatim to the given path, or to stdout when none.
fn emit_raw(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content).map_err(Error::from),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn emit_json(out: &Option<PathBuf>, value: &Value) -> Result<()> {
    emit_raw(out, &format!("{value}\n"))
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Solve {
            graph,
            cost,
            alg,
            seed,
            out,
        } => {
            let g = read_graph(&graph)?;
            let f = CostFunction::parse_spec(&cost)?;
            let started = Instant::now();
            let (sigma, report) = match alg {
                Algorithm::Dp | Algorithm::Brute => {
                    let (sigma, total) = if alg == Algorithm::Dp {
                        dp_optimal_nanip(&g, &f)?
                    } else {
                        brute_force_optimal(&g, &f)?
                    };
                    let report = sequence_cost(&g, &f, &sigma)?;
                    if (report.total - total).abs() > 1e-9 {
                        return Err(Error::Invariant(format!(
                            "solver reported {total} but replaying its sequence scored {}",
                            report.total
                        )));
                    }
                    (sigma, report)
                }
                Algorithm::Greedy => greedy(&g, &f, seed)?,
                Algorithm::Degree => degree_descending(&g, &f)?,
                Algorithm::Random => random_sequence(&g, &f, seed)?,
            };
            let wall_time_ms = started.elapsed().as_secs_f64() * 1e3;
            emit_json(
                &out,
                &json!({
                    "schema": 1,
                    "algorithm": alg.name(),
                    "seed": seed,
                    "sequence": sigma,
                    "r_values": report.r_values,
                    "node_costs": report.node_costs,
                    "total_cost": report.total,
                    "wall_time_ms": wall_time_ms,
                }),
            )
        }
        Command::Bound { graph, cost, out } => {
            let g = read_graph(&graph)?;
            let f = CostFunction::parse_spec(&cost)?;
            let jensen = jensen_whole_graph_bound(&g, &f)?;
            let relaxation = relaxation_bound(&g, &f)?;
            let mut payload = json!({
                "schema": 1,
                "jensen_bound": jensen,
                "relaxation_bound": relaxation,
                "greedy_upper_bound": Value::Null,
            });
            // The two lower bounds apply to any graph, but the greedy bound
            // needs connectivity; report its absence instead of failing the
            // whole query.
            match greedy_upper_bound(&g, &f) {
                Ok(sol) => {
                    payload["greedy_upper_bound"] = serde_json::to_value(sol).expect("plain struct")
                }
                Err(e @ Error::InvalidInput(_)) => {
                    payload["greedy_upper_bound_error"] = Value::String(e.to_string())
                }
                Err(e) => return Err(e),
            }
            emit_json(&out, &payload)
        }
        Command::BenchFig3 {
            n,
            m_start,
            m_end,
            m_step,
            instances,
            runs,
            cost,
            seed,
            out,
            json: as_json,
        } => {
            let params = BenchParams {
                n,
                m_values: edge_grid(n, m_start, m_end, m_step)?,
                instances_per_m: instances,
                greedy_runs: runs,
                cost: CostFunction::parse_spec(&cost)?,
                master_seed: seed,
            };
            let records = run_benchmark(&params)?;
            let body = if as_json {
                let mut s = serde_json::to_string(&records).expect("plain structs");
                s.push('\n');
                s
            } else {
                to_csv_string(&records)
            };
            emit_raw(&out, &body)?;
            let ratio = mean_greedy_ratio(&records);
            let summary = json!({
                "schema": 1,
                "instances": records.len(),
                "mean_greedy_ratio": ratio,
            });
            if out.is_some() {
                println!("{summary}");
            } else {
                eprintln!("{summary}");
            }
            if ratio > 1.05 {
                return Err(Error::Invariant(format!(
                    "mean greedy/optimum ratio {ratio} exceeds 1.05"
                )));
            }
            Ok(())
        }
        Command::ExpectedCost {
            n,
            p,
            cost,
            trials,
            seed,
            out,
        } => {
            let model = ErModel::new(n, p)?;
            let f = CostFunction::parse_spec(&cost)?;
            let exact = expected_cost_exact(&model, &f)?;
            let mut payload = json!({
                "schema": 1,
                "n": n,
                "p": p,
                "exact": exact,
                "upper_bound": Value::Null,
                "monte_carlo": Value::Null,
            });
            match expected_cost_upper(&model, &f) {
                Ok(upper) => payload["upper_bound"] = json!(upper),
                // Only the p = 0 degeneracy lands here; everything else was
                // already validated while computing the exact value.
                Err(e @ Error::InvalidInput(_)) => {
                    payload["upper_bound_error"] = Value::String(e.to_string())
                }
                Err(e) => return Err(e),
            }
            if let Some(trials) = trials {
                let (mean, std_error) = expected_cost_monte_carlo(&model, &f, trials, seed)?;
                payload["monte_carlo"] = json!({
                    "mean": mean,
                    "std_error": std_error,
                    "trials": trials,
                });
            }
            emit_json(&out, &payload)
        }
        Command::Gen {
            kind,
            n,
            m,
            p,
            seed,
            out,
        } => {
            let g = match kind {
                GenKind::Tree => {
                    reject_flag(m.is_some(), "--m does not apply to kind tree")?;
                    reject_flag(p.is_some(), "--p does not apply to kind tree")?;
                    gen_random_tree(n, seed)?
                }
                GenKind::Connected => {
                    reject_flag(p.is_some(), "--p does not apply to kind connected")?;
                    let m =
                        m.ok_or_else(|| Error::InvalidInput("--m is required for kind connected".into()))?;
                    gen_random_connected(n, m, seed)?
                }
                GenKind::Gnp => {
                    reject_flag(m.is_some(), "--m does not apply to kind gnp")?;
                    let p =
                        p.ok_or_else(|| Error::InvalidInput("--p is required for kind gnp".into()))?;
                    gen_gnp(n, p, seed)?
                }
            };
            emit_raw(&out, &g.to_edge_list()?)
        }
        Command::ExportIp { graph, cost, out } => {
            let g = read_graph(&graph)?;
            let f = CostFunction::parse_spec(&cost)?;
            let model = build_ip(&g, &f)?;
            emit_raw(&out, &model.to_lp_string())
        }
    }
}

fn reject_flag(present: bool, message: &str) -> Result<()> {
    if present {
        Err(Error::InvalidInput(message.into()))
    } else {
        Ok(())
    }
}

/// Expands the --m-start/--m-end/--m-step flags into the concrete edge grid,
/// defaulting to "from tree to complete".
fn edge_grid(
    n: usize,
    m_start: Option<usize>,
    m_end: Option<usize>,
    m_step: usize,
) -> Result<Vec<usize>> {
    if m_step == 0 {
        return Err(Error::InvalidInput("--m-step must be positive".into()));
    }
    if n < 2 {
        return Err(Error::InvalidInput(
            "benchmark needs at least two nodes".into(),
        ));
    }
    let start = m_start.unwrap_or(n - 1);
    let end = m_end.unwrap_or(n * (n - 1) / 2);
    if start > end {
        return Err(Error::InvalidInput(format!(
            "empty edge grid: start {start} exceeds end {end}"
        )));
    }
    Ok((start..=end).step_by(m_step).collect())
}
