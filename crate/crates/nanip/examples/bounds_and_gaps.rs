//! Prints the two lower bounds and the greedy upper bound next to the exact
//! optimum on a few shapes, witnesses included. Neither lower bound
//! dominates the other: the cycle favors the averaging bound, a star with a
//! long tail favors the budget relaxation.

use nanip::bounds::{greedy_upper_bound, jensen_whole_graph_bound, relaxation_bound};
use nanip::cost::CostFunction;
use nanip::exact::dp_optimal_nanip;
use nanip::generate::gen_random_connected;
use nanip::Graph;

fn show(name: &str, g: &Graph, f: &CostFunction) -> nanip::Result<()> {
    let (_, optimum) = dp_optimal_nanip(g, f)?;
    let jensen = jensen_whole_graph_bound(g, f)?;
    let relax = relaxation_bound(g, f)?;
    let upper = greedy_upper_bound(g, f)?;
    println!("{name}: n={}, m={}", g.n(), g.m());
    println!("  averaging lower bound {jensen:.6}");
    println!(
        "  relaxation lower bound {:.6}  (s={}, r={:?}, p={:?})",
        relax.bound, relax.s, relax.r, relax.p_values
    );
    println!("  optimum               {optimum:.6}");
    println!(
        "  greedy upper bound    {:.6}  (s={:?}, q={:?})",
        upper.bound, upper.s, upper.q
    );
    Ok(())
}

fn main() -> nanip::Result<()> {
    let f = CostFunction::parse_spec("reciprocal:1")?;

    let cycle = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    show("4-cycle", &cycle, &f)?;

    let star_tail = Graph::from_edges(
        6,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)],
    )?;
    show("star with a tail", &star_tail, &f)?;

    let dense = gen_random_connected(12, 40, 5)?;
    show("random n=12, m=40", &dense, &f)?;
    Ok(())
}
