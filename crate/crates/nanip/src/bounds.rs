//! Analytic lower bounds on the optimal sequence cost and a degree-sequence
//! upper bound on the greedy heuristic's cost.
//!
//! All bounds require a decreasing convex cost function. The lower bounds
//! average installed-neighbor counts and push the average through f (Jensen),
//! or minimize sum f(p_i) over integer vectors 0 <= p_i <= d_i with
//! sum p_i = m, a relaxation of the true count multisets. Each bound returns
//! its internal witness so callers can check more than the scalar.

use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Closed-form solution of the degree-capped relaxation.
///
/// `p_values` is ascending: the first `s` entries equal the `s` smallest
/// degrees, the rest sit at `d_s` or `d_s + 1`. When `s == 0` the entries are
/// floor(m/n) and floor(m/n)+1 instead, and `r` is None.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct RelaxationSolution {
    /// Largest k with (n-k) d_k + sum_{i<=k} d_i <= m, or 0 when none.
    pub s: usize,
    /// Residual m - (n-s) d_s - sum_{i<=s} d_i; None when s == 0.
    pub r: Option<usize>,
    /// The minimizing assignment, ascending. Sums to m, respects the caps.
    pub p_values: Vec<usize>,
    /// sum f(p_i), a lower bound on every sequence cost.
    pub bound: f64,
}

/// Witness for the greedy upper bound. `s` and `q` are None when the
/// degree-sequence decomposition does not apply and the generic
/// connected-graph bound f(0) + (n-1) f(1) was returned instead.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct GreedyBoundSolution {
    pub s: Option<usize>,
    pub q: Option<usize>,
    pub bound: f64,
}

fn require_decreasing_convex(f: &CostFunction, max_arg: usize) -> Result<()> {
    if f.is_decreasing_convex(max_arg) {
        Ok(())
    } else {
        Err(Error::InvalidInput(
            "bound requires decreasing convex f".into(),
        ))
    }
}

/// Jensen lower bound on the cost of installing the nodes `h_nodes` after
/// everything else: |H| * f((edges inside H + cut edges into H) / |H|), with
/// f linearly interpolated at the fractional argument.
pub fn jensen_subgraph_bound(g: &Graph, h_nodes: &[usize], f: &CostFunction) -> Result<f64> {
    if h_nodes.is_empty() {
        return Err(Error::InvalidInput(
            "subgraph bound needs a nonempty node subset".into(),
        ));
    }
    let mut in_h = vec![false; g.n()];
    for &v in h_nodes {
        if v >= g.n() {
            return Err(Error::InvalidInput(format!(
                "subset node {v} outside 0..{}",
                g.n()
            )));
        }
        if in_h[v] {
            return Err(Error::InvalidInput(format!("subset repeats node {v}")));
        }
        in_h[v] = true;
    }
    f.ensure_defined(g.max_degree())?;
    require_decreasing_convex(f, g.max_degree())?;
    let mut inside = 0usize;
    let mut cut = 0usize;
    for &v in h_nodes {
        for &w in g.neighbors(v) {
            if in_h[w] {
                if w > v {
                    inside += 1;
                }
            } else {
                cut += 1;
            }
        }
    }
    let h = h_nodes.len() as f64;
    Ok(h * f.interpolate((inside + cut) as f64 / h)?)
}

/// Jensen bound applied to the whole graph, anchored by a free first node:
/// f(0) + (n-1) * f(m / (n-1)). A single node degenerates to f(0).
pub fn jensen_whole_graph_bound(g: &Graph, f: &CostFunction) -> Result<f64> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInput("bound needs at least one node".into()));
    }
    f.ensure_defined(g.max_degree())?;
    require_decreasing_convex(f, g.max_degree())?;
    if n == 1 {
        return Ok(f.eval(0));
    }
    let avg = g.m() as f64 / (n - 1) as f64;
    Ok(f.eval(0) + (n - 1) as f64 * f.interpolate(avg)?)
}

/// Minimizes sum f(p_i) over integer 0 <= p_i <= d_i with sum p_i = m, in
/// closed form from the ascending degree sequence. A decreasing convex f
/// rewards pushing every p_i as high as its cap or the common level allows:
/// below the threshold index s the caps bind (p_i = d_i), above it the
/// entries level out at two adjacent values that spend the remaining budget.
/// The level starts at d_s and lands strictly below d_{s+1} (that is what
/// makes s maximal), so the tail entries respect their caps.
pub fn relaxation_bound(g: &Graph, f: &CostFunction) -> Result<RelaxationSolution> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInput("bound needs at least one node".into()));
    }
    f.ensure_defined(g.max_degree())?;
    require_decreasing_convex(f, g.max_degree())?;
    let d = g.degree_sequence();
    let m = g.m();
    let mut prefix = vec![0usize; n + 1];
    for k in 1..=n {
        prefix[k] = prefix[k - 1] + d[k - 1];
    }
    // (n-k) d_k + prefix(k) is nondecreasing in k, so the feasible set is a
    // prefix and the scan can stop at the first failure.
    let mut s = 0usize;
    for k in 1..=n {
        if (n - k) * d[k - 1] + prefix[k] <= m {
            s = k;
        } else {
            break;
        }
    }
    let r = if s == 0 {
        None
    } else {
        Some(m - (n - s) * d[s - 1] - prefix[s])
    };
    let tail = n - s;
    let mut p_values = Vec::with_capacity(n);
    p_values.extend_from_slice(&d[..s]);
    // tail == 0 only on edgeless graphs (s = n forces m = 0): nothing left.
    let residual = m - prefix[s];
    if let Some(base) = residual.checked_div(tail) {
        let rem = residual - base * tail;
        for _ in 0..tail - rem {
            p_values.push(base);
        }
        for _ in 0..rem {
            p_values.push(base + 1);
        }
    }
    debug_assert_eq!(p_values.iter().sum::<usize>(), m);
    debug_assert!(p_values.iter().zip(&d).all(|(p, cap)| p <= cap));
    let mut bound = 0.0;
    for &p in &p_values {
        bound += f.eval(p);
    }
    Ok(RelaxationSolution {
        s,
        r,
        p_values,
        bound,
    })
}

/// Upper bound on the realized cost of the cost-greedy heuristic, from the
/// degree sequence alone: the largest s with q = m - s - (d_{s+3} + ... +
/// d_n) in [1, d_{s+2}] yields f(0) + s f(1) + f(q) + f(d_{s+3}) + ... +
/// f(d_n). Greedy installs s+1 nodes cheaply before frontier nodes can
/// accumulate q and then full-degree aid; maximizing s gives the tightest
/// such decomposition. Falls back to f(0) + (n-1) f(1), valid on any
/// connected graph because after the first node greedy always extends the
/// frontier at cost at most f(1).
pub fn greedy_upper_bound(g: &Graph, f: &CostFunction) -> Result<GreedyBoundSolution> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInput("bound needs at least one node".into()));
    }
    f.ensure_defined(g.max_degree())?;
    require_decreasing_convex(f, g.max_degree())?;
    if !g.is_connected() {
        return Err(Error::InvalidInput(
            "greedy upper bound requires a connected graph".into(),
        ));
    }
    if n < 3 {
        // One node costs exactly f(0); a single edge costs f(0) + f(1).
        let bound = if n == 2 { f.eval(0) + f.eval(1) } else { f.eval(0) };
        return Ok(GreedyBoundSolution {
            s: None,
            q: None,
            bound,
        });
    }
    let d = g.degree_sequence();
    let m = g.m();
    let mut suffix = vec![0usize; n + 2];
    for i in (1..=n).rev() {
        suffix[i] = suffix[i + 1] + d[i - 1];
    }
    // s = n-1 would reference d_{n+1}; the scan starts at n-2.
    for s in (0..=n - 2).rev() {
        let trailing = if s + 3 <= n { suffix[s + 3] } else { 0 };
        if m < s + trailing + 1 {
            continue;
        }
        let q = m - s - trailing;
        if q <= d[s + 1] {
            let mut bound = f.eval(0) + s as f64 * f.eval(1) + f.eval(q);
            for i in s + 3..=n {
                bound += f.eval(d[i - 1]);
            }
            return Ok(GreedyBoundSolution {
                s: Some(s),
                q: Some(q),
                bound,
            });
        }
    }
    Ok(GreedyBoundSolution {
        s: None,
        q: None,
        bound: f.eval(0) + (n - 1) as f64 * f.eval(1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reciprocal(scale: f64) -> CostFunction {
        CostFunction::Reciprocal { scale }
    }

    fn cycle4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    /// Minimal brute force for "install the rest after `pre` is present",
    /// used as an oracle for the subgraph bound.
    fn optimal_completion_cost(g: &Graph, f: &CostFunction, pre: &[usize]) -> f64 {
        let mut remaining: Vec<usize> = (0..g.n()).filter(|v| !pre.contains(v)).collect();
        let mut best = f64::INFINITY;
        permute(g, f, pre, &mut remaining, &mut Vec::new(), 0.0, &mut best);
        fn permute(
            g: &Graph,
            f: &CostFunction,
            pre: &[usize],
            pool: &mut Vec<usize>,
            done: &mut Vec<usize>,
            acc: f64,
            best: &mut f64,
        ) {
            if pool.is_empty() {
                *best = best.min(acc);
                return;
            }
            for i in 0..pool.len() {
                let v = pool.remove(i);
                let r = g
                    .neighbors(v)
                    .iter()
                    .filter(|w| pre.contains(w) || done.contains(w))
                    .count();
                done.push(v);
                permute(g, f, pre, pool, done, acc + f.eval(r), best);
                done.pop();
                pool.insert(i, v);
            }
        }
        best
    }

    #[test]
    fn subgraph_bound_on_three_quarters_of_the_cycle() {
        let g = cycle4();
        let f = reciprocal(1.0);
        // H = {1,2,3}: two inside edges, two cut edges from node 0.
        let bound = jensen_subgraph_bound(&g, &[1, 2, 3], &f).unwrap();
        assert!((bound - 4.0 / 3.0).abs() < 1e-12, "got {bound}");
        let oracle = optimal_completion_cost(&g, &f, &[0]);
        assert!(bound <= oracle + 1e-12, "bound {bound} > oracle {oracle}");
    }

    #[test]
    fn subgraph_bound_single_node_is_exact() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let f = reciprocal(1.0);
        // Installing the center last costs exactly f(4).
        assert_eq!(jensen_subgraph_bound(&star, &[0], &f).unwrap(), f.eval(4));
        // An isolated node has no cut edges and costs f(0).
        let with_isolated = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(jensen_subgraph_bound(&with_isolated, &[2], &f).unwrap(), f.eval(0));
    }

    #[test]
    fn subgraph_bound_rejects_bad_subsets() {
        let g = cycle4();
        let f = reciprocal(1.0);
        assert!(jensen_subgraph_bound(&g, &[], &f).is_err());
        assert!(jensen_subgraph_bound(&g, &[1, 1], &f).is_err());
        assert!(jensen_subgraph_bound(&g, &[9], &f).is_err());
        assert!(jensen_subgraph_bound(&g, &[1], &CostFunction::Indicator).is_err());
    }

    #[test]
    fn whole_graph_bound_values() {
        let f = reciprocal(1.0);
        // Trees: 1 + (n-1)/2, and the bound is tight there.
        let path4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(jensen_whole_graph_bound(&path4, &f).unwrap(), 2.5);
        // 4-cycle: 1 + 3 * f(4/3) = 7/3, also tight.
        let b = jensen_whole_graph_bound(&cycle4(), &f).unwrap();
        assert!((b - 7.0 / 3.0).abs() < 1e-12);
        // Triangle: 1 + 2 * f(3/2) = 11/6.
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = jensen_whole_graph_bound(&k3, &f).unwrap();
        assert!((b - 11.0 / 6.0).abs() < 1e-12);
        // Single node.
        let one = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(jensen_whole_graph_bound(&one, &f).unwrap(), 1.0);
    }

    #[test]
    fn relaxation_on_the_path() {
        // Degrees [1,1,2], m=2: every level is infeasible, so s=0 and the
        // budget spreads as [0,1,1].
        let path3 = Graph::parse_edge_list("0 1\n1 2").unwrap();
        let sol = relaxation_bound(&path3, &reciprocal(1.0)).unwrap();
        assert_eq!(sol.s, 0);
        assert_eq!(sol.r, None);
        assert_eq!(sol.p_values, vec![0, 1, 1]);
        assert_eq!(sol.bound, 2.0);
    }

    #[test]
    fn relaxation_on_cycle_with_pendant() {
        // Degrees [1,2,2,2,3], m=5: s=1 binds only the pendant's cap, the
        // rest level at d_1 = 1.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let sol = relaxation_bound(&g, &reciprocal(1.0)).unwrap();
        assert_eq!(sol.s, 1);
        assert_eq!(sol.r, Some(0));
        assert_eq!(sol.p_values, vec![1, 1, 1, 1, 1]);
        assert_eq!(sol.bound, 2.5);
    }

    #[test]
    fn relaxation_on_the_triangle() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let sol = relaxation_bound(&k3, &reciprocal(1.0)).unwrap();
        assert_eq!(sol.s, 0);
        assert_eq!(sol.p_values, vec![1, 1, 1]);
        assert_eq!(sol.bound, 1.5);
    }

    #[test]
    fn relaxation_rejects_non_convex_cost() {
        match relaxation_bound(&cycle4(), &CostFunction::Indicator) {
            Err(Error::InvalidInput(msg)) => {
                assert_eq!(msg, "bound requires decreasing convex f")
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn greedy_bound_on_the_star() {
        let star = Graph::from_edges(5, &[(4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        let sol = greedy_upper_bound(&star, &reciprocal(1.0)).unwrap();
        assert_eq!((sol.s, sol.q), (Some(3), Some(1)));
        assert_eq!(sol.bound, 3.0);
    }

    #[test]
    fn greedy_bound_on_the_cycle() {
        let sol = greedy_upper_bound(&cycle4(), &reciprocal(1.0)).unwrap();
        assert_eq!((sol.s, sol.q), (Some(2), Some(2)));
        assert!((sol.bound - 7.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn greedy_bound_on_trees_matches_the_lower_bound() {
        let path4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let f = reciprocal(1.0);
        let upper = greedy_upper_bound(&path4, &f).unwrap().bound;
        let lower = jensen_whole_graph_bound(&path4, &f).unwrap();
        assert_eq!(upper, lower);
        assert_eq!(upper, 2.5);
    }

    #[test]
    fn greedy_bound_is_tight_on_k4() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let f = reciprocal(1.0);
        let sol = greedy_upper_bound(&k4, &f).unwrap();
        // Complete graphs force r-values 0..n-1 in every order, so the bound
        // must coincide with that forced cost.
        let forced: f64 = (0..4).map(|k| f.eval(k)).sum();
        assert!((sol.bound - forced).abs() < 1e-12, "{sol:?}");
    }

    #[test]
    fn greedy_bound_degenerate_and_invalid_inputs() {
        let f = reciprocal(1.0);
        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let sol = greedy_upper_bound(&edge, &f).unwrap();
        assert_eq!(sol.bound, 1.5);
        assert_eq!(sol.s, None);
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(greedy_upper_bound(&split, &f).is_err());
    }

    #[test]
    fn perturbing_a_weakly_convex_table_barely_moves_the_bound() {
        // All p_i end up >= 1 here (m >= n), so adding eps^d to a table with
        // tied differences must shift the bound by O(eps), not O(1).
        let g = cycle4();
        let table = vec![3.0, 2.0, 1.5, 1.25];
        let f = CostFunction::Table(table.clone());
        let eps = 1e-6f64;
        let perturbed = CostFunction::Table(
            table
                .iter()
                .enumerate()
                .map(|(d, v)| v + eps.powi(d as i32))
                .collect(),
        );
        assert!(perturbed.is_decreasing_convex(3));
        let a = relaxation_bound(&g, &f).unwrap().bound;
        let b = relaxation_bound(&g, &perturbed).unwrap().bound;
        assert!((a - b).abs() <= 1e-4, "{a} vs {b}");
    }

    #[test]
    fn bounds_sit_below_a_known_optimum() {
        // 4-cycle optimum is 7/3 (checked by the exact module); both lower
        // bounds must not exceed it.
        let g = cycle4();
        let f = reciprocal(1.0);
        let opt = 7.0 / 3.0;
        assert!(jensen_whole_graph_bound(&g, &f).unwrap() <= opt + 1e-12);
        assert!(relaxation_bound(&g, &f).unwrap().bound <= opt + 1e-12);
    }
}
