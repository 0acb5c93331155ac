//! Installation-order heuristics: cost-greedy, degree-descending, and
//! uniform random. Each returns the chosen order together with its cost
//! breakdown.

use std::cmp::Reverse;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cost::{sequence_cost, CostFunction, CostReport, InstallSequence};
use crate::error::Result;
use crate::graph::Graph;
use crate::seed::{rng_from_seed, Seed};

/// Removes `v` from `buckets[r]` in O(1), patching the position of whichever
/// node gets swapped into its slot.
fn detach(buckets: &mut [Vec<usize>], pos: &mut [usize], r: usize, v: usize) {
    let bucket = &mut buckets[r];
    let i = pos[v];
    let removed = bucket.swap_remove(i);
    debug_assert_eq!(removed, v);
    if let Some(&tail) = bucket.get(i) {
        pos[tail] = i;
    }
}

/// Cost-greedy: each step installs a node whose current installed-neighbor
/// count minimizes f, breaking ties uniformly at random. Nodes live in
/// buckets keyed by their count, so a step costs O(max_degree) plus the
/// neighbor updates, O(m) overall across the run.
pub fn greedy(g: &Graph, f: &CostFunction, seed: Seed) -> Result<(InstallSequence, CostReport)> {
    let n = g.n();
    f.ensure_defined(g.max_degree())?;
    if n == 0 {
        return Ok((InstallSequence::empty(), CostReport::empty()));
    }
    let mut rng = rng_from_seed(seed);
    let f_by_r: Vec<f64> = (0..=g.max_degree()).map(|k| f.eval(k)).collect();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); g.max_degree() + 1];
    buckets[0] = (0..n).collect();
    let mut pos: Vec<usize> = (0..n).collect();
    let mut count = vec![0usize; n];
    let mut installed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = buckets
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_empty())
            .map(|(k, _)| f_by_r[k])
            .fold(f64::INFINITY, f64::min);
        let tie_total: usize = buckets
            .iter()
            .enumerate()
            .filter(|(k, b)| !b.is_empty() && f_by_r[*k] == best)
            .map(|(_, b)| b.len())
            .sum();
        let mut pick = rng.random_range(0..tie_total);
        let mut chosen = usize::MAX;
        for (k, bucket) in buckets.iter().enumerate() {
            if bucket.is_empty() || f_by_r[k] != best {
                continue;
            }
            if pick < bucket.len() {
                chosen = bucket[pick];
                break;
            }
            pick -= bucket.len();
        }
        detach(&mut buckets, &mut pos, count[chosen], chosen);
        installed[chosen] = true;
        order.push(chosen);
        for &w in g.neighbors(chosen) {
            if installed[w] {
                continue;
            }
            detach(&mut buckets, &mut pos, count[w], w);
            count[w] += 1;
            pos[w] = buckets[count[w]].len();
            buckets[count[w]].push(w);
        }
    }
    let sigma = InstallSequence::new(order)?;
    let report = sequence_cost(g, f, &sigma)?;
    Ok((sigma, report))
}

/// Installs nodes in order of descending degree, ties by ascending id.
pub fn degree_descending(g: &Graph, f: &CostFunction) -> Result<(InstallSequence, CostReport)> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let sigma = InstallSequence::new(order)?;
    let report = sequence_cost(g, f, &sigma)?;
    Ok((sigma, report))
}

/// Installs nodes in a uniformly random order.
pub fn random_sequence(
    g: &Graph,
    f: &CostFunction,
    seed: Seed,
) -> Result<(InstallSequence, CostReport)> {
    let mut rng = rng_from_seed(seed);
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(&mut rng);
    let sigma = InstallSequence::new(order)?;
    let report = sequence_cost(g, f, &sigma)?;
    Ok((sigma, report))
}
