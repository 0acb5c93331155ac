//! Benchmark harness sweeping random connected graphs across an edge-count
//! grid, comparing the exact optimum against heuristics and analytic bounds
//! instance by instance.

use std::io::{self, Write};

use rayon::prelude::*;

use crate::bounds::{greedy_upper_bound, jensen_whole_graph_bound, relaxation_bound};
use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::exact::{dp_optimal_nanip, DP_MAX_NODES};
use crate::generate::gen_random_connected;
use crate::heuristics::{degree_descending, greedy, random_sequence};
use crate::seed::{derive_seed, Seed};

/// One benchmark instance: a random connected graph, solved and bounded.
/// Field order matches the CSV column order.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct BenchRecord {
    pub m: usize,
    pub instance_id: usize,
    pub seed: Seed,
    pub optimum: f64,
    pub greedy_mean: f64,
    pub greedy_min: f64,
    pub degree_cost: f64,
    pub random_mean: f64,
    pub jensen_bound: f64,
    pub relaxation_bound: f64,
    pub greedy_upper_bound: f64,
}

pub const CSV_HEADER: &str = "m,instance_id,seed,optimum,greedy_mean,greedy_min,degree_cost,\
random_mean,jensen_bound,relaxation_bound,greedy_upper_bound";

/// Sweep configuration. The default reproduces the standard comparison:
/// 15-node graphs from tree-sparse to complete in steps of 7 edges, five
/// instances per size, ten greedy and random runs each, reciprocal cost.
#[derive(Debug, Clone)]
pub struct BenchParams {
    pub n: usize,
    pub m_values: Vec<usize>,
    pub instances_per_m: usize,
    pub greedy_runs: usize,
    pub cost: CostFunction,
    pub master_seed: Seed,
}

impl Default for BenchParams {
    fn default() -> Self {
        BenchParams {
            n: 15,
            m_values: (14..=105).step_by(7).collect(),
            instances_per_m: 5,
            greedy_runs: 10,
            cost: CostFunction::Reciprocal { scale: 1.0 },
            master_seed: 42,
        }
    }
}

fn validate(params: &BenchParams) -> Result<()> {
    let n = params.n;
    if n < 2 {
        return Err(Error::InvalidInput(
            "benchmark needs at least two nodes".into(),
        ));
    }
    if n > DP_MAX_NODES {
        return Err(Error::SizeGuard(format!(
            "benchmark solves every instance exactly and supports at most {DP_MAX_NODES} nodes, got {n}"
        )));
    }
    let max_m = n * (n - 1) / 2;
    if params.m_values.is_empty() {
        return Err(Error::InvalidInput("benchmark edge grid is empty".into()));
    }
    for &m in &params.m_values {
        if m < n - 1 || m > max_m {
            return Err(Error::InvalidInput(format!(
                "edge count {m} outside [{}, {max_m}] for connected graphs on {n} nodes",
                n - 1
            )));
        }
    }
    if params.instances_per_m == 0 || params.greedy_runs == 0 {
        return Err(Error::InvalidInput(
            "instance and run counts must be positive".into(),
        ));
    }
    params.cost.ensure_defined(n - 1)?;
    if !params.cost.is_decreasing_convex(n - 1) {
        return Err(Error::InvalidInput(
            "benchmark bounds require decreasing convex f".into(),
        ));
    }
    if params.cost.eval(0) == 0.0 {
        // Decreasing and nonnegative with f(0) = 0 means identically zero.
        return Err(Error::InvalidInput(
            "cost function is identically zero on the benchmark range; ratios would be undefined"
                .into(),
        ));
    }
    Ok(())
}

fn solve_instance(params: &BenchParams, m: usize, instance_id: usize) -> Result<BenchRecord> {
    let f = &params.cost;
    let seed = derive_seed(params.master_seed, &[1, m as u64, instance_id as u64]);
    let g = gen_random_connected(params.n, m, seed)?;
    let (_, optimum) = dp_optimal_nanip(&g, f)?;
    let mut greedy_sum = 0.0f64;
    let mut greedy_min = f64::INFINITY;
    for run in 0..params.greedy_runs {
        let s = derive_seed(params.master_seed, &[2, m as u64, instance_id as u64, run as u64]);
        let total = greedy(&g, f, s)?.1.total;
        greedy_sum += total;
        greedy_min = greedy_min.min(total);
    }
    let greedy_mean = greedy_sum / params.greedy_runs as f64;
    let degree_cost = degree_descending(&g, f)?.1.total;
    let mut random_sum = 0.0f64;
    for run in 0..params.greedy_runs {
        let s = derive_seed(params.master_seed, &[3, m as u64, instance_id as u64, run as u64]);
        random_sum += random_sequence(&g, f, s)?.1.total;
    }
    let random_mean = random_sum / params.greedy_runs as f64;
    let jensen = jensen_whole_graph_bound(&g, f)?;
    let relaxation = relaxation_bound(&g, f)?.bound;
    let upper = greedy_upper_bound(&g, f)?.bound;

    // Every produced number has a proven order relative to the optimum;
    // a violation beyond float slack means a solver or bound bug.
    let slack = 1e-9;
    let context = format!("bench instance n={}, m={m}, id={instance_id}", params.n);
    let ordered = [
        (jensen, optimum, "Jensen bound exceeds the optimum"),
        (relaxation, optimum, "relaxation bound exceeds the optimum"),
        (optimum, greedy_min, "optimum exceeds a greedy run"),
        (greedy_min, greedy_mean, "greedy minimum exceeds its mean"),
        (greedy_mean, upper, "greedy mean exceeds its upper bound"),
        (optimum, degree_cost, "optimum exceeds the degree heuristic"),
        (optimum, random_mean, "optimum exceeds the random mean"),
    ];
    for (lo, hi, what) in ordered {
        if lo > hi + slack {
            return Err(Error::Invariant(format!(
                "{context}: {what} ({lo} > {hi})"
            )));
        }
    }
    Ok(BenchRecord {
        m,
        instance_id,
        seed,
        optimum,
        greedy_mean,
        greedy_min,
        degree_cost,
        random_mean,
        jensen_bound: jensen,
        relaxation_bound: relaxation,
        greedy_upper_bound: upper,
    })
}

/// Runs the sweep. Instances are independent and solved in parallel on the
/// current rayon pool; the output order is fixed by the parameter grid, not
/// by scheduling.
pub fn run_benchmark(params: &BenchParams) -> Result<Vec<BenchRecord>> {
    validate(params)?;
    let tasks: Vec<(usize, usize)> = params
        .m_values
        .iter()
        .flat_map(|&m| (0..params.instances_per_m).map(move |i| (m, i)))
        .collect();
    tasks
        .par_iter()
        .map(|&(m, i)| solve_instance(params, m, i))
        .collect()
}

/// Mean over instances of greedy_mean / optimum; 1.0 means greedy always
/// matched the optimum on average.
pub fn mean_greedy_ratio(records: &[BenchRecord]) -> f64 {
    let sum: f64 = records.iter().map(|r| r.greedy_mean / r.optimum).sum();
    sum / records.len() as f64
}

pub fn write_csv<W: Write>(records: &[BenchRecord], w: &mut W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.m,
            r.instance_id,
            r.seed,
            r.optimum,
            r.greedy_mean,
            r.greedy_min,
            r.degree_cost,
            r.random_mean,
            r.jensen_bound,
            r.relaxation_bound,
            r.greedy_upper_bound
        )?;
    }
    Ok(())
}

pub fn to_csv_string(records: &[BenchRecord]) -> String {
    let mut buf = Vec::new();
    write_csv(records, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("CSV output is ASCII")
}
