//! Integer-program export of the sequencing problem in LP file format, plus
//! validation of solver assignments against direct cost evaluation.
//!
//! Variables: X_i_t = 1 when node i (0-based) takes time slot t (1-based),
//! E_i_j = 1 when adjacent node i is installed before j, and c_j tracking
//! f(installed-neighbor count of j) from below. Precedence rows pin E to the
//! assignment, pair rows make E antisymmetric, and per-node tangent cuts
//! c_j >= f(d) + (f(d) - f(d-1)) (x_j - d) recover f exactly at integer
//! arguments because f is decreasing convex. Only the X variables need to be
//! integral; E inherits integrality from them.

use std::fmt::Write as _;
use std::io::{self, Write};

use crate::cost::{sequence_cost, CostFunction, CostReport, InstallSequence};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Numbers of variables of each kind in the exported model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IpVariableCounts {
    pub x: usize,
    pub e: usize,
    pub c: usize,
}

/// Numbers of constraint rows of each kind, in file order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IpConstraintCounts {
    pub cuts: usize,
    pub precedence: usize,
    pub pairs: usize,
    pub assignment_rows: usize,
    pub assignment_cols: usize,
}

/// A fully validated model ready to serialize.
#[derive(Debug, Clone)]
pub struct IpModel {
    graph: Graph,
    costs: Vec<CostFunction>,
}

/// Value at `x` of the tangent to f through (d-1, f(d-1)) and (d, f(d)).
pub fn tangent_cut_value(f: &CostFunction, d: usize, x: f64) -> f64 {
    let slope = f.eval(d) - f.eval(d - 1);
    f.eval(d) + slope * (x - d as f64)
}

/// Pointwise maximum of the tangent cuts for a node of the given degree,
/// which equals f at every integer in 0..=deg when f is decreasing convex.
/// Degree zero has no cuts and falls back to the constant f(0).
pub fn epigraph_value(f: &CostFunction, deg: usize, x: f64) -> f64 {
    if deg == 0 {
        return f.eval(0);
    }
    (1..=deg)
        .map(|d| tangent_cut_value(f, d, x))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Builds the model with one shared cost function for every node.
pub fn build_ip(g: &Graph, f: &CostFunction) -> Result<IpModel> {
    build_ip_per_node(g, &vec![f.clone(); g.n()])
}

/// Builds the model with an individual cost function per node. Each must be
/// decreasing convex on that node's degree range, or the tangent cuts would
/// not reproduce it.
pub fn build_ip_per_node(g: &Graph, fs: &[CostFunction]) -> Result<IpModel> {
    if g.n() == 0 {
        return Err(Error::InvalidInput(
            "integer program needs at least one node".into(),
        ));
    }
    if fs.len() != g.n() {
        return Err(Error::InvalidInput(format!(
            "{} cost functions supplied for {} nodes",
            fs.len(),
            g.n()
        )));
    }
    for (j, f) in fs.iter().enumerate() {
        f.ensure_defined(g.degree(j))?;
        if !f.is_decreasing_convex(g.degree(j)) {
            return Err(Error::InvalidInput(format!(
                "integer program requires decreasing convex f (node {j})"
            )));
        }
    }
    Ok(IpModel {
        graph: g.clone(),
        costs: fs.to_vec(),
    })
}

impl IpModel {
    pub fn node_count(&self) -> usize {
        self.graph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.m()
    }

    pub fn variable_counts(&self) -> IpVariableCounts {
        let n = self.graph.n();
        IpVariableCounts {
            x: n * n,
            e: 2 * self.graph.m(),
            c: n,
        }
    }

    pub fn constraint_counts(&self) -> IpConstraintCounts {
        let n = self.graph.n();
        let m = self.graph.m();
        IpConstraintCounts {
            cuts: 2 * m,
            precedence: (n - 1) * 2 * m,
            pairs: m,
            assignment_rows: n,
            assignment_cols: n,
        }
    }

    /// Serializes the model in LP file format. The layout is deterministic:
    /// cuts by (node, tangent point), precedence by (horizon, earlier,
    /// later), pairs by edge, then the assignment rows and columns.
    pub fn to_lp_string(&self) -> String {
        let g = &self.graph;
        let n = g.n();
        let mut out = String::new();
        out.push_str("Minimize\n obj:");
        for j in 0..n {
            if j > 0 {
                out.push_str(" +");
            }
            let _ = write!(out, " c_{j}");
        }
        out.push_str("\nSubject To\n");
        for j in 0..n {
            let f = &self.costs[j];
            for d in 1..=g.degree(j) {
                let rise = f.eval(d - 1) - f.eval(d);
                let rhs = f.eval(d) + d as f64 * rise;
                let _ = write!(out, " cut_{j}_{d}: c_{j}");
                if rise != 0.0 {
                    for &i in g.neighbors(j) {
                        let _ = write!(out, " + {rise} E_{i}_{j}");
                    }
                }
                let _ = writeln!(out, " >= {rhs}");
            }
        }
        for horizon in 1..n {
            for i in 0..n {
                for &j in g.neighbors(i) {
                    let _ = write!(out, " prec_{horizon}_{i}_{j}: E_{i}_{j}");
                    for t in 1..=horizon {
                        let _ = write!(out, " - X_{i}_{t}");
                    }
                    for t in 1..=horizon {
                        let _ = write!(out, " + X_{j}_{t}");
                    }
                    out.push_str(" >= 0\n");
                }
            }
        }
        for (u, v) in g.edges() {
            let _ = writeln!(out, " pair_{u}_{v}: E_{u}_{v} + E_{v}_{u} = 1");
        }
        for i in 0..n {
            let _ = write!(out, " row_{i}:");
            for t in 1..=n {
                let sep = if t == 1 { "" } else { " +" };
                let _ = write!(out, "{sep} X_{i}_{t}");
            }
            out.push_str(" = 1\n");
        }
        for t in 1..=n {
            let _ = write!(out, " col_{t}:");
            for i in 0..n {
                let sep = if i == 0 { "" } else { " +" };
                let _ = write!(out, "{sep} X_{i}_{t}");
            }
            out.push_str(" = 1\n");
        }
        out.push_str("Bounds\n");
        for i in 0..n {
            for &j in g.neighbors(i) {
                let _ = writeln!(out, " 0 <= E_{i}_{j} <= 1");
            }
        }
        for j in 0..n {
            let floor = if g.degree(j) == 0 {
                self.costs[j].eval(0)
            } else {
                0.0
            };
            let _ = writeln!(out, " c_{j} >= {floor}");
        }
        out.push_str("Binaries\n");
        for i in 0..n {
            out.push(' ');
            for t in 1..=n {
                let sep = if t == 1 { "" } else { " " };
                let _ = write!(out, "{sep}X_{i}_{t}");
            }
            out.push('\n');
        }
        out.push_str("End\n");
        out
    }

    pub fn write_lp<W: Write>(&self, w: &mut W) -> io::Result<()> {
        w.write_all(self.to_lp_string().as_bytes())
    }
}

/// Decodes a solved X matrix (`x[i][t-1]`, entries within 1e-6 of 0 or 1)
/// into an installation sequence, scores it directly, and cross-checks the
/// tangent-cut objective against that score.
pub fn validate_assignment(g: &Graph, f: &CostFunction, x: &[Vec<f64>]) -> Result<CostReport> {
    const TOL: f64 = 1e-6;
    let n = g.n();
    if x.len() != n || x.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidInput(format!(
            "assignment matrix must be {n} x {n}"
        )));
    }
    let mut node_at_time = vec![usize::MAX; n];
    for (i, row) in x.iter().enumerate() {
        let mut slots = Vec::new();
        for (t, &v) in row.iter().enumerate() {
            if (v - 1.0).abs() <= TOL {
                slots.push(t);
            } else if v.abs() > TOL {
                return Err(Error::InvalidInput(format!(
                    "X[{i}][{t}] = {v} is not within {TOL} of 0 or 1"
                )));
            }
        }
        if slots.len() != 1 {
            return Err(Error::InvalidInput(format!(
                "node {i} is assigned {} time slots",
                slots.len()
            )));
        }
        let t = slots[0];
        if node_at_time[t] != usize::MAX {
            return Err(Error::InvalidInput(format!(
                "time slot {} holds more than one node",
                t + 1
            )));
        }
        node_at_time[t] = i;
    }
    let sigma = InstallSequence::new(node_at_time)?;
    let report = sequence_cost(g, f, &sigma)?;
    let objective: f64 = report
        .r_values
        .iter()
        .zip(sigma.order())
        .map(|(&r, &v)| epigraph_value(f, g.degree(v), r as f64))
        .sum();
    if (objective - report.total).abs() > TOL {
        return Err(Error::Invariant(format!(
            "tangent objective {objective} disagrees with direct cost {}",
            report.total
        )));
    }
    Ok(report)
}
