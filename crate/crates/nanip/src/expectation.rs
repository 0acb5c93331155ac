//! Expected sequence cost on Erdős-Rényi random graphs.
//!
//! For a fixed installation order on G(n, p), the number of earlier-installed
//! neighbors of the node at step t is Binomial(t-1, p), independent of which
//! order was fixed. That gives a closed-form expectation, an upper bound that
//! replaces the truncated binomial tail with the full negative-binomial mass
//! 1/p, and a seeded Monte Carlo estimator for cross-checking both.

use rand::seq::SliceRandom;

use crate::cost::{sequence_cost, CostFunction, InstallSequence};
use crate::error::{Error, Result};
use crate::generate::gen_gnp;
use crate::seed::{derive_seed, rng_from_seed, Seed};

/// Edge-probability model G(n, p) with validated parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErModel {
    n: usize,
    p: f64,
}

impl ErModel {
    pub fn new(n: usize, p: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("model needs at least one node".into()));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidInput(format!(
                "edge probability {p} outside [0, 1]"
            )));
        }
        Ok(ErModel { n, p })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// Exact expected cost of a fixed installation order:
/// sum over steps t of E[f(Binomial(t-1, p))], computed by rolling the
/// binomial pmf forward one trial at a time, O(n^2) arithmetic.
pub fn expected_cost_exact(model: &ErModel, f: &CostFunction) -> Result<f64> {
    let (n, p) = (model.n, model.p);
    f.ensure_defined(n - 1)?;
    let mut row = vec![1.0f64];
    let mut total = 0.0;
    for t in 1..=n {
        for (k, &mass) in row.iter().enumerate() {
            total += mass * f.eval(k);
        }
        if t < n {
            let mut next = vec![0.0f64; t + 1];
            for (k, &mass) in row.iter().enumerate() {
                next[k] += mass * (1.0 - p);
                next[k + 1] += mass * p;
            }
            row = next;
        }
    }
    Ok(total)
}

/// Upper bound (1/p) * sum_{k=0}^{n-1} f(k): extending each step's binomial
/// weight on f(k) to the full negative-binomial mass can only add
/// nonnegative terms. Meaningless at p = 0, hence rejected there.
pub fn expected_cost_upper(model: &ErModel, f: &CostFunction) -> Result<f64> {
    if model.p <= 0.0 {
        return Err(Error::InvalidInput(
            "expected-cost upper bound requires p > 0".into(),
        ));
    }
    f.ensure_defined(model.n - 1)?;
    let sum: f64 = (0..model.n).map(|k| f.eval(k)).sum();
    Ok(sum / model.p)
}

/// Monte Carlo estimate of the fixed-order expected cost: each trial draws a
/// fresh graph and a fresh uniform order from seeds derived per trial, then
/// scores it. Returns (mean, standard error); the error is 0 for a single
/// trial.
pub fn expected_cost_monte_carlo(
    model: &ErModel,
    f: &CostFunction,
    trials: u64,
    seed: Seed,
) -> Result<(f64, f64)> {
    if trials == 0 {
        return Err(Error::InvalidInput("trial count must be positive".into()));
    }
    f.ensure_defined(model.n - 1)?;
    let mut mean = 0.0f64;
    let mut m2 = 0.0f64;
    for t in 0..trials {
        let g = gen_gnp(model.n, model.p, derive_seed(seed, &[t, 0]))?;
        let mut order: Vec<usize> = (0..model.n).collect();
        order.shuffle(&mut rng_from_seed(derive_seed(seed, &[t, 1])));
        let sigma = InstallSequence::new(order)?;
        let x = sequence_cost(&g, f, &sigma)?.total;
        let count = (t + 1) as f64;
        let delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }
    let se = if trials > 1 {
        (m2 / (trials - 1) as f64 / trials as f64).sqrt()
    } else {
        0.0
    };
    Ok((mean, se))
}
