//! The 0/1 indicator cost makes a node free exactly when none of its
//! neighbors are installed yet, so an optimal installation order front-loads
//! a maximum independent set. On the Petersen graph that set has size 4.

use nanip::cost::{sequence_cost, CostFunction};
use nanip::exact::{dp_optimal_nanip, independence_number};
use nanip::Graph;

fn petersen() -> nanip::Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges)
}

fn main() -> nanip::Result<()> {
    let g = petersen()?;
    let f = CostFunction::Indicator;

    let (sigma, total) = dp_optimal_nanip(&g, &f)?;
    let report = sequence_cost(&g, &f, &sigma)?;
    let free: Vec<usize> = sigma
        .order()
        .iter()
        .zip(&report.r_values)
        .filter(|&(_, &r)| r == 0)
        .map(|(&v, _)| v)
        .collect();

    println!("Petersen graph: n={}, m={}", g.n(), g.m());
    println!("optimal order {:?}", sigma.order());
    println!("nodes installed with no installed neighbor: {free:?}");
    println!("paid installations: {total}");
    println!("independence number: {}", independence_number(&g)?);

    // The free nodes form an independent set by construction.
    for (i, &u) in free.iter().enumerate() {
        for &v in &free[i + 1..] {
            assert!(!g.has_edge(u, v));
        }
    }
    Ok(())
}
