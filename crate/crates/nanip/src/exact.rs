//! Exact solvers: a layered subset dynamic program and a factorial
//! brute-force oracle, plus the independence-number cross-check that the
//! indicator cost function enables.
//!
//! The DP accepts any cost oracle c(u, S) that depends only on the node and
//! the installed set, so it also covers generalizations where a node's cost
//! is an arbitrary function of the already-installed induced subgraph.

use crate::cost::{CostFunction, InstallSequence};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest node count accepted by [`brute_force_optimal`].
pub const BRUTE_FORCE_MAX_NODES: usize = 10;
/// Largest node count accepted by [`dp_optimal`]; bitmask subsets cap this
/// well below word size, and memory is the real ceiling (2^n table entries).
pub const DP_MAX_NODES: usize = 26;

/// Cost of installing `node` when exactly the nodes in the `installed`
/// bitmask are already present.
///
/// Correctness precondition of the subset DP: the value depends only on
/// (node, set), never on the order the set was built in.
pub trait SubgraphCostOracle {
    fn cost(&self, node: usize, installed: u64) -> f64;
}

impl<F: Fn(usize, u64) -> f64> SubgraphCostOracle for F {
    fn cost(&self, node: usize, installed: u64) -> f64 {
        self(node, installed)
    }
}

/// The standard oracle: f applied to the number of installed neighbors.
pub struct NeighborCountOracle<'a> {
    f: &'a CostFunction,
    masks: Vec<u64>,
}

impl<'a> NeighborCountOracle<'a> {
    pub fn new(g: &Graph, f: &'a CostFunction) -> Result<Self> {
        f.ensure_defined(g.max_degree())?;
        Ok(NeighborCountOracle {
            f,
            masks: neighbor_masks(g),
        })
    }
}

impl SubgraphCostOracle for NeighborCountOracle<'_> {
    fn cost(&self, node: usize, installed: u64) -> f64 {
        self.f.eval((self.masks[node] & installed).count_ones() as usize)
    }
}

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect()
}

/// Globally minimal sequence cost by enumerating all n! permutations in
/// lexicographic order; on ties the lexicographically smallest optimal
/// sequence is kept. Deliberately naive, to serve as an independent oracle
/// for the DP.
pub fn brute_force_optimal(g: &Graph, f: &CostFunction) -> Result<(InstallSequence, f64)> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_NODES {
        return Err(Error::SizeGuard(format!(
            "brute force enumerates n! sequences and supports at most {BRUTE_FORCE_MAX_NODES} nodes, got {n}"
        )));
    }
    f.ensure_defined(g.max_degree())?;
    if n == 0 {
        return Ok((InstallSequence::empty(), 0.0));
    }
    let masks = neighbor_masks(g);
    let f_by_r: Vec<f64> = (0..=g.max_degree()).map(|k| f.eval(k)).collect();
    // Depth-first over prefixes, trying nodes in ascending id order; costs
    // accumulate in installation order so the reported total is bit-identical
    // to re-evaluating the winning sequence.
    struct Search<'a> {
        n: usize,
        masks: &'a [u64],
        f_by_r: &'a [f64],
        current: Vec<usize>,
        best: f64,
        best_order: Vec<usize>,
    }
    impl Search<'_> {
        fn descend(&mut self, used: u64, acc: f64) {
            if self.current.len() == self.n {
                if acc < self.best {
                    self.best = acc;
                    self.best_order.clone_from(&self.current);
                }
                return;
            }
            for v in 0..self.n {
                if used & (1 << v) == 0 {
                    let r = (self.masks[v] & used).count_ones() as usize;
                    self.current.push(v);
                    self.descend(used | (1 << v), acc + self.f_by_r[r]);
                    self.current.pop();
                }
            }
        }
    }
    let mut search = Search {
        n,
        masks: &masks,
        f_by_r: &f_by_r,
        current: Vec::with_capacity(n),
        best: f64::INFINITY,
        best_order: Vec::new(),
    };
    search.descend(0, 0.0);
    Ok((InstallSequence::new(search.best_order)?, search.best))
}

/// Exact optimum by dynamic programming over node subsets.
///
/// For each subset T the table holds the cheapest way to install exactly T,
/// minimizing over the last-installed node u: cost(T \ u) + c(u, T \ u).
/// Layers are processed by subset size with only two cost layers live;
/// within a layer, subsets are indexed by their rank in ascending-bitmask
/// (colexicographic) order, so the layer is a flat array rather than a hash
/// map. One predecessor byte per subset reconstructs the sequence.
///
/// Ties prefer the smaller node id, making output reproducible across runs.
pub fn dp_optimal<O: SubgraphCostOracle + ?Sized>(
    g: &Graph,
    oracle: &O,
) -> Result<(InstallSequence, f64)> {
    let n = g.n();
    if n > DP_MAX_NODES {
        return Err(Error::SizeGuard(format!(
            "subset DP holds 2^n table entries and supports at most {DP_MAX_NODES} nodes, got {n}"
        )));
    }
    if n == 0 {
        return Ok((InstallSequence::empty(), 0.0));
    }
    let binom = binomial_table(n);
    let mut pred = vec![0u8; 1usize << n];
    let mut prev = vec![0.0f64]; // layer 0: the empty set
    let mut elems: Vec<usize> = Vec::with_capacity(n);

    for t in 1..=n {
        let layer_len = binom[n][t];
        let mut cur = vec![f64::INFINITY; layer_len];
        let mut mask: u64 = (1u64 << t) - 1;
        for slot in cur.iter_mut() {
            elems.clear();
            let mut rest = mask;
            while rest != 0 {
                elems.push(rest.trailing_zeros() as usize);
                rest &= rest - 1;
            }
            // rank(T) in colex order is sum over positions i (1-based, ids
            // ascending) of C(elems[i-1], i). Removing the i-th element keeps
            // C(a_j, j) for j < i and shifts later terms to C(a_j, j-1), so
            // prefix and suffix sums give every sub-rank in O(t) total.
            let mut pre = [0usize; DP_MAX_NODES + 1];
            for i in 1..=t {
                pre[i] = pre[i - 1] + binom[elems[i - 1]][i];
            }
            let mut suf = [0usize; DP_MAX_NODES + 2];
            for i in (1..=t).rev() {
                suf[i] = suf[i + 1] + binom[elems[i - 1]][i - 1];
            }
            let mut best = f64::INFINITY;
            let mut best_u = 0usize;
            for i in 1..=t {
                let u = elems[i - 1];
                let sub_rank = pre[i - 1] + suf[i + 1];
                let without = mask & !(1u64 << u);
                let cand = prev[sub_rank] + oracle.cost(u, without);
                if cand < best {
                    best = cand;
                    best_u = u;
                }
            }
            *slot = best;
            pred[mask as usize] = best_u as u8;
            mask = next_same_popcount(mask);
        }
        prev = cur;
    }

    let mut order = vec![0usize; n];
    let mut mask: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for t in (0..n).rev() {
        let u = pred[mask as usize] as usize;
        order[t] = u;
        mask &= !(1u64 << u);
    }
    let total = prev[0];
    Ok((InstallSequence::new(order)?, total))
}

/// [`dp_optimal`] specialized to the installed-neighbor-count cost c(u, S) =
/// f(|N(u) and S|).
pub fn dp_optimal_nanip(g: &Graph, f: &CostFunction) -> Result<(InstallSequence, f64)> {
    let oracle = NeighborCountOracle::new(g, f)?;
    dp_optimal(g, &oracle)
}

/// Independence number alpha(G), computed through the exact solver: under the
/// indicator cost (f(0) = 0, f(k >= 1) = 1) a sequence's cost is n minus the
/// number of nodes installed with no earlier neighbor, and those nodes form
/// an independent set; minimizing the cost maximizes that set.
pub fn independence_number(g: &Graph) -> Result<usize> {
    let (_, total) = dp_optimal_nanip(g, &CostFunction::Indicator)?;
    let cost = total.round() as usize;
    debug_assert!((total - cost as f64).abs() < 1e-9);
    Ok(g.n() - cost)
}

/// Gosper's hack: next larger integer with the same popcount. The wrap at the
/// top of a layer is never used because layers are enumerated by exact count.
fn next_same_popcount(v: u64) -> u64 {
    let c = v & v.wrapping_neg();
    let r = v.wrapping_add(c);
    if c == 0 || r == 0 {
        return u64::MAX;
    }
    (((r ^ v) >> 2) / c) | r
}

/// Pascal triangle up to C(n, n); entries past the diagonal stay 0 so
/// C(a, b) can be read without bounds juggling.
fn binomial_table(n: usize) -> Vec<Vec<usize>> {
    let mut c = vec![vec![0usize; n + 2]; n + 1];
    for a in 0..=n {
        c[a][0] = 1;
        for b in 1..=a {
            c[a][b] = c[a - 1][b - 1] + c[a - 1][b];
        }
    }
    c
}
