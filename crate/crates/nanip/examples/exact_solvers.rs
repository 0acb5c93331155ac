//! Runs both exact solvers on the same instance. The subset dynamic program
//! and the factorial brute force must land on the same total; the sequences
//! may differ when several orders are optimal.

use nanip::cost::CostFunction;
use nanip::exact::{brute_force_optimal, dp_optimal_nanip, BRUTE_FORCE_MAX_NODES};
use nanip::generate::gen_random_connected;

fn main() -> nanip::Result<()> {
    let f = CostFunction::parse_spec("reciprocal:1")?;
    let g = gen_random_connected(9, 16, 3)?;

    let (dp_seq, dp_total) = dp_optimal_nanip(&g, &f)?;
    let (brute_seq, brute_total) = brute_force_optimal(&g, &f)?;
    println!("n={}, m={}", g.n(), g.m());
    println!("dp    total {dp_total:.12} order {:?}", dp_seq.order());
    println!("brute total {brute_total:.12} order {:?}", brute_seq.order());
    println!("difference {:.3e}", (dp_total - brute_total).abs());

    // Past the brute-force guard only the dynamic program applies; it
    // handles 2^n subsets, so around 20 nodes stays comfortable.
    let big = gen_random_connected(18, 40, 3)?;
    let (_, total) = dp_optimal_nanip(&big, &f)?;
    println!("dp on n=18, m=40: total {total:.12}");
    match brute_force_optimal(&big, &f) {
        Err(e) => println!("brute force at n=18 refuses: {e}"),
        Ok(_) => unreachable!("guard admits at most {BRUTE_FORCE_MAX_NODES} nodes"),
    }
    Ok(())
}
