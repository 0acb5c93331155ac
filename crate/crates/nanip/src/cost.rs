//! Cost functions and installation-sequence cost evaluation.
//!
//! A cost function f maps the number of already-installed neighbors of a node
//! to the nonnegative cost of installing that node. Installing all nodes in
//! the order given by a permutation sigma costs sum over steps t of
//! f(r(v_t)), where r(v_t) counts the neighbors of v_t that appear earlier in
//! sigma. Evaluation is pure: identical inputs produce identical reports.

use std::fs;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Absolute slack used when classifying tabulated values as convex; absorbs
/// representation rounding of closed forms materialized into tables.
const CONVEXITY_SLACK: f64 = 1e-12;

/// Installation-cost function over installed-neighbor counts.
///
/// The closed-form kinds evaluate analytically; `Table` holds explicit values
/// f(0), f(1), ... and is rejected (not extrapolated) when a graph needs
/// arguments beyond its last entry.
#[derive(Debug, Clone, PartialEq)]
pub enum CostFunction {
    /// Explicit values `values[k] = f(k)`.
    Table(Vec<f64>),
    /// f(k) = scale / (1 + k).
    Reciprocal { scale: f64 },
    /// f(k) = slope * k + intercept.
    Linear { slope: f64, intercept: f64 },
    /// f(0) = 0 and f(k) = 1 for k >= 1.
    Indicator,
}

impl CostFunction {
    /// Evaluates f(k). Panics on a table argument past the last entry; callers
    /// that accept external input are expected to run [`CostFunction::ensure_defined`]
    /// first.
    pub fn eval(&self, k: usize) -> f64 {
        match self {
            CostFunction::Table(values) => values[k],
            CostFunction::Reciprocal { scale } => scale / (1.0 + k as f64),
            CostFunction::Linear { slope, intercept } => slope * k as f64 + intercept,
            CostFunction::Indicator => {
                if k == 0 {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }

    /// Checks that f is defined and nonnegative on `0..=max_arg`.
    pub fn ensure_defined(&self, max_arg: usize) -> Result<()> {
        match self {
            CostFunction::Table(values) => {
                if values.len() <= max_arg {
                    return Err(Error::InvalidInput(format!(
                        "cost table covers f(0)..f({}) but f({max_arg}) is needed",
                        values.len() as isize - 1
                    )));
                }
                if let Some(bad) = values[..=max_arg]
                    .iter()
                    .find(|v| !v.is_finite() || **v < 0.0)
                {
                    return Err(Error::InvalidInput(format!(
                        "cost values must be finite and nonnegative, found {bad}"
                    )));
                }
            }
            CostFunction::Reciprocal { scale } => {
                if !scale.is_finite() || *scale < 0.0 {
                    return Err(Error::InvalidInput(format!(
                        "reciprocal scale must be finite and nonnegative, got {scale}"
                    )));
                }
            }
            CostFunction::Linear { .. } => {
                // A linear function on 0..=max_arg is nonnegative exactly when
                // both endpoints are.
                for k in [0, max_arg] {
                    let v = self.eval(k);
                    if !v.is_finite() || v < 0.0 {
                        return Err(Error::InvalidInput(format!(
                            "linear cost is negative or non-finite at k={k}: {v}"
                        )));
                    }
                }
            }
            CostFunction::Indicator => {}
        }
        Ok(())
    }

    /// True when f is nonincreasing on `0..=max_arg`.
    pub fn is_decreasing(&self, max_arg: usize) -> bool {
        match self {
            CostFunction::Table(values) => {
                let end = max_arg.min(values.len().saturating_sub(1));
                (0..end).all(|k| values[k] >= values[k + 1])
            }
            CostFunction::Reciprocal { scale } => *scale >= 0.0,
            CostFunction::Linear { slope, .. } => *slope <= 0.0,
            CostFunction::Indicator => false,
        }
    }

    /// True when f is nonincreasing with nonincreasing successive differences
    /// on `0..=max_arg`, i.e. f(i) - f(i+1) >= f(j) - f(j+1) for i <= j.
    /// Weak convexity (constant differences, as in any linear f) qualifies.
    pub fn is_decreasing_convex(&self, max_arg: usize) -> bool {
        if !self.is_decreasing(max_arg) {
            return false;
        }
        match self {
            CostFunction::Table(values) => {
                let end = max_arg.min(values.len().saturating_sub(1));
                (0..end.saturating_sub(1)).all(|k| {
                    let d0 = values[k] - values[k + 1];
                    let d1 = values[k + 1] - values[k + 2];
                    d0 >= d1 - CONVEXITY_SLACK
                })
            }
            // 1/(1+k) has strictly decreasing differences; a linear function
            // has constant ones. Both classify analytically.
            CostFunction::Reciprocal { .. } | CostFunction::Linear { .. } => true,
            CostFunction::Indicator => false,
        }
    }

    /// Linear interpolation of f between floor(q) and ceil(q); equals f(q) at
    /// integer q. Rejects negative or NaN arguments, and table arguments past
    /// the last entry.
    pub fn interpolate(&self, q: f64) -> Result<f64> {
        if !q.is_finite() || q < 0.0 {
            return Err(Error::InvalidInput(format!(
                "interpolation argument must be a nonnegative real, got {q}"
            )));
        }
        let lo = q.floor() as usize;
        let hi = q.ceil() as usize;
        if let CostFunction::Table(values) = self {
            if hi >= values.len() {
                return Err(Error::InvalidInput(format!(
                    "interpolation argument {q} exceeds table domain 0..={}",
                    values.len() - 1
                )));
            }
        }
        let f_lo = self.eval(lo);
        if hi == lo {
            return Ok(f_lo);
        }
        let f_hi = self.eval(hi);
        Ok(f_lo + (q - lo as f64) * (f_hi - f_lo))
    }

    /// Parses the cost-spec grammar used by the CLI and config files:
    /// `reciprocal:<a>`, `linear:<a>,<b>`, `indicator`, or `table:<path>`
    /// where the file holds whitespace-separated reals f(0), f(1), ...
    pub fn parse_spec(spec: &str) -> Result<CostFunction> {
        let reject = |detail: String| Err(Error::InvalidInput(detail));
        if spec == "indicator" {
            return Ok(CostFunction::Indicator);
        }
        if let Some(rest) = spec.strip_prefix("reciprocal:") {
            return match rest.trim().parse::<f64>() {
                Ok(scale) if scale.is_finite() => Ok(CostFunction::Reciprocal { scale }),
                _ => reject(format!("'reciprocal:<a>' needs a finite real scale, got '{rest}'")),
            };
        }
        if let Some(rest) = spec.strip_prefix("linear:") {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() == 2 {
                if let (Ok(slope), Ok(intercept)) = (
                    parts[0].trim().parse::<f64>(),
                    parts[1].trim().parse::<f64>(),
                ) {
                    if slope.is_finite() && intercept.is_finite() {
                        return Ok(CostFunction::Linear { slope, intercept });
                    }
                }
            }
            return reject(format!("'linear:<a>,<b>' needs two finite reals, got '{rest}'"));
        }
        if let Some(path) = spec.strip_prefix("table:") {
            let text = fs::read_to_string(path).map_err(|e| {
                Error::InvalidInput(format!("cannot read cost table '{path}': {e}"))
            })?;
            let mut values = Vec::new();
            for tok in text.split_whitespace() {
                match tok.parse::<f64>() {
                    Ok(v) if v.is_finite() => values.push(v),
                    _ => return reject(format!("cost table '{path}': '{tok}' is not a finite real")),
                }
            }
            if values.is_empty() {
                return reject(format!("cost table '{path}' holds no values"));
            }
            return Ok(CostFunction::Table(values));
        }
        reject(format!(
            "unrecognized cost spec '{spec}'; expected reciprocal:<a>, linear:<a>,<b>, indicator, or table:<path>"
        ))
    }
}

/// A permutation of node ids `0..n`; `order()[t]` is the node installed at
/// step t (0-based). Construction validates the permutation property.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(transparent)]
pub struct InstallSequence(Vec<usize>);

impl InstallSequence {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::InvalidInput(format!(
                    "sequence of length {n} is not a permutation of 0..{n} (offending id {v})"
                )));
            }
            seen[v] = true;
        }
        Ok(InstallSequence(order))
    }

    pub fn empty() -> Self {
        InstallSequence(Vec::new())
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

/// Per-step cost breakdown for one installation sequence.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct CostReport {
    /// Installed-neighbor count of the node installed at each step.
    pub r_values: Vec<usize>,
    /// f applied to each entry of `r_values`.
    pub node_costs: Vec<f64>,
    /// Sum of `node_costs` in step order.
    pub total: f64,
}

impl CostReport {
    pub fn empty() -> Self {
        CostReport {
            r_values: Vec::new(),
            node_costs: Vec::new(),
            total: 0.0,
        }
    }
}

/// For each step t, the number of neighbors of `sigma.order()[t]` installed
/// at earlier steps. The counts always sum to m: every edge is counted once,
/// at its later endpoint.
pub fn installed_neighbor_counts(g: &Graph, sigma: &InstallSequence) -> Result<Vec<usize>> {
    if sigma.len() != g.n() {
        return Err(Error::InvalidInput(format!(
            "sequence length {} does not match node count {}",
            sigma.len(),
            g.n()
        )));
    }
    let mut installed = vec![false; g.n()];
    let mut counts = Vec::with_capacity(g.n());
    for &v in sigma.order() {
        let r = g.neighbors(v).iter().filter(|&&w| installed[w]).count();
        counts.push(r);
        installed[v] = true;
    }
    Ok(counts)
}

/// Evaluates the total installation cost of `sigma` under `f`, with the
/// per-step breakdown. Costs are summed in installation order, so repeated
/// calls reproduce bit-identical totals. f must cover the counts this
/// sequence realizes; it may leave higher degrees undefined.
pub fn sequence_cost(g: &Graph, f: &CostFunction, sigma: &InstallSequence) -> Result<CostReport> {
    let r_values = installed_neighbor_counts(g, sigma)?;
    f.ensure_defined(r_values.iter().copied().max().unwrap_or(0))?;
    let node_costs: Vec<f64> = r_values.iter().map(|&r| f.eval(r)).collect();
    let mut total = 0.0;
    for &c in &node_costs {
        total += c;
    }
    Ok(CostReport {
        r_values,
        node_costs,
        total,
    })
}
