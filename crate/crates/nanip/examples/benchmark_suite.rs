//! Runs a reduced benchmark sweep and prints the CSV plus the headline
//! ratio. The full-size sweep (n=15, m from 14 to 105 in steps of 7) is
//! what the bench-fig3 subcommand runs; this keeps the grid small enough
//! to skim.

use nanip::bench::{mean_greedy_ratio, run_benchmark, to_csv_string, BenchParams};
use nanip::cost::CostFunction;

fn main() -> nanip::Result<()> {
    let params = BenchParams {
        n: 12,
        m_values: vec![11, 22, 44, 66],
        instances_per_m: 3,
        greedy_runs: 5,
        cost: CostFunction::parse_spec("reciprocal:1")?,
        master_seed: 42,
    };

    // Instances solve in parallel on the rayon pool; the record order is
    // fixed by the grid, so the CSV is reproducible byte for byte.
    let records = run_benchmark(&params)?;
    print!("{}", to_csv_string(&records));
    println!(
        "mean greedy/optimum ratio over {} instances: {:.4}",
        records.len(),
        mean_greedy_ratio(&records)
    );
    Ok(())
}
