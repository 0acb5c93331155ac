//! Expected cost of a uniformly random installation order on G(n, p):
//! the exact binomial sum, the closed-form upper bound, and a Monte Carlo
//! estimate with its standard error.

use nanip::cost::CostFunction;
use nanip::expectation::{
    expected_cost_exact, expected_cost_monte_carlo, expected_cost_upper, ErModel,
};

fn main() -> nanip::Result<()> {
    let f = CostFunction::parse_spec("reciprocal:1")?;
    let n = 12;

    println!("n={n}, f(k) = 1/(1+k)");
    println!("{:>5} {:>10} {:>10} {:>16}", "p", "exact", "upper", "monte carlo");
    for tenths in [1u32, 3, 5, 7, 9] {
        let p = tenths as f64 / 10.0;
        let model = ErModel::new(n, p)?;
        let exact = expected_cost_exact(&model, &f)?;
        let upper = expected_cost_upper(&model, &f)?;
        let (mean, se) = expected_cost_monte_carlo(&model, &f, 4000, 99)?;
        println!("{p:>5.1} {exact:>10.5} {upper:>10.5} {mean:>10.5} +/- {se:.5}");
    }

    // At p = 1 every draw is the complete graph and the upper bound is
    // exact; as p falls the gap widens.
    let model = ErModel::new(n, 1.0)?;
    println!(
        "p=1.0 exact {:.6} upper {:.6}",
        expected_cost_exact(&model, &f)?,
        expected_cost_upper(&model, &f)?
    );
    Ok(())
}
