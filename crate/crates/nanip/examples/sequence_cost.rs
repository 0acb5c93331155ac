//! Evaluates a few installation orders by hand and shows how each node's
//! cost falls with the number of neighbors already installed.

use nanip::cost::{sequence_cost, CostFunction, InstallSequence};
use nanip::Graph;

fn main() -> nanip::Result<()> {
    // A 4-cycle with a pendant node hanging off node 3.
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])?;
    let f = CostFunction::parse_spec("reciprocal:12")?;

    for order in [
        vec![0, 1, 2, 3, 4],
        vec![4, 3, 2, 1, 0],
        vec![0, 2, 1, 3, 4],
    ] {
        let sigma = InstallSequence::new(order)?;
        let report = sequence_cost(&g, &f, &sigma)?;
        println!("order {:?}", sigma.order());
        println!("  installed-neighbor counts {:?}", report.r_values);
        println!("  node costs {:?}", report.node_costs);
        println!("  total {}", report.total);
    }

    // The same graph under a cost table: position k holds f(k), so the
    // table must reach the largest realized neighbor count.
    let table = CostFunction::Table(vec![9.0, 5.0, 3.0]);
    let sigma = InstallSequence::new(vec![0, 1, 2, 3, 4])?;
    let report = sequence_cost(&g, &table, &sigma)?;
    println!("table costs {:?} total {}", report.node_costs, report.total);
    Ok(())
}
