//! Helpers shared by the integration suites: fixed graph shapes, exhaustive
//! enumerators, exact-rational oracles, and a structural LP reader. Each is
//! written independently of the library internals it checks.
#![allow(dead_code)]

use std::path::PathBuf;

use nanip::cost::CostFunction;
use nanip::graph::Graph;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

pub fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Star with center 0 and n-1 leaves.
pub fn star_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn empty_graph(n: usize) -> Graph {
    Graph::from_edges(n, &[]).unwrap()
}

/// Every connected labeled graph on n nodes, by enumerating all edge
/// subsets. Sizes for n = 1..=6: 1, 1, 4, 38, 728, 26704.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "enumeration is exponential in n^2");
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Maximum independent set size by subset enumeration.
pub fn max_independent_set(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let mut best = 0;
    for s in 0u32..1 << n {
        let independent = (0..n).all(|v| s >> v & 1 == 0 || s & masks[v] == 0);
        if independent {
            best = best.max(s.count_ones() as usize);
        }
    }
    best
}

/// The exact rational represented by an f64, so float-valued costs can be
/// compared without introducing any new rounding.
pub fn rat(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite value")
}

pub fn rational_eval(f: &CostFunction, k: usize) -> BigRational {
    match f {
        CostFunction::Table(values) => rat(values[k]),
        CostFunction::Reciprocal { scale } => {
            rat(*scale) / BigRational::from_integer(BigInt::from(k + 1))
        }
        CostFunction::Linear { slope, intercept } => {
            rat(*slope) * BigRational::from_integer(BigInt::from(k)) + rat(*intercept)
        }
        CostFunction::Indicator => {
            if k == 0 {
                BigRational::zero()
            } else {
                BigRational::one()
            }
        }
    }
}

/// Minimum of sum f(p_i) over integer vectors with 0 <= p_i <= caps[i] and
/// sum p_i = budget, by exhaustive dynamic programming in exact rational
/// arithmetic. None when the caps cannot absorb the budget.
pub fn rational_budget_minimum(
    caps: &[usize],
    budget: usize,
    f: &CostFunction,
) -> Option<BigRational> {
    let values: Vec<BigRational> = (0..=caps.iter().copied().max().unwrap_or(0))
        .map(|k| rational_eval(f, k))
        .collect();
    let mut dp: Vec<Option<BigRational>> = vec![None; budget + 1];
    dp[0] = Some(BigRational::zero());
    for &cap in caps {
        let mut next: Vec<Option<BigRational>> = vec![None; budget + 1];
        for b in 0..=budget {
            let Some(cur) = &dp[b] else { continue };
            for p in 0..=cap.min(budget - b) {
                let cand = cur + &values[p];
                let slot = &mut next[b + p];
                if slot.as_ref().is_none_or(|best| *best > cand) {
                    *slot = Some(cand);
                }
            }
        }
        dp = next;
    }
    dp[budget].take()
}

pub fn binomial_f64(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Gauss hypergeometric series with first parameter 1:
/// sum over i of ((b)_i / (c)_i) z^i, truncated once terms drop below tol.
/// Converges for |z| < 1 and is used only there.
pub fn hyp2f1_one(b: f64, c: f64, z: f64, tol: f64) -> f64 {
    assert!(z.abs() < 1.0);
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for i in 0..100_000 {
        term *= (b + i as f64) / (c + i as f64) * z;
        sum += term;
        if term.abs() < tol {
            break;
        }
    }
    sum
}

/// One parsed LP constraint: name, variable mentions, comparator, rhs.
#[derive(Debug, Clone)]
pub struct LpRow {
    pub name: String,
    pub vars: Vec<String>,
    pub op: String,
    pub rhs: f64,
}

/// Structural summary of an LP file produced by the exporter.
#[derive(Debug)]
pub struct LpFile {
    pub objective_vars: Vec<String>,
    pub rows: Vec<LpRow>,
    pub bounds: Vec<String>,
    pub binaries: Vec<String>,
}

/// Minimal LP-format reader: checks the section layout and row grammar the
/// exporter promises, and collects enough structure for assertions. Panics
/// with a description on any malformed line, which is exactly what a test
/// wants.
pub fn parse_lp(text: &str) -> LpFile {
    let mut lines = text.lines().map(str::trim);
    assert_eq!(lines.next(), Some("Minimize"), "missing Minimize header");
    let obj = lines.next().expect("missing objective");
    let obj_body = obj.strip_prefix("obj:").expect("objective must be named obj");
    let objective_vars: Vec<String> = obj_body
        .split_whitespace()
        .filter(|t| *t != "+")
        .map(str::to_owned)
        .collect();
    assert_eq!(lines.next(), Some("Subject To"), "missing Subject To");
    let mut rows = Vec::new();
    let mut bounds = Vec::new();
    let mut binaries = Vec::new();
    let mut section = "rows";
    for line in lines {
        match (section, line) {
            (_, "") => continue,
            ("rows", "Bounds") => section = "bounds",
            ("bounds", "Binaries") => section = "binaries",
            ("binaries", "End") => section = "done",
            ("rows", _) => rows.push(parse_row(line)),
            ("bounds", _) => {
                let tokens: Vec<&str> = line.split_whitespace().collect();
                // Either "0 <= var <= 1" or "var >= value".
                let var = match tokens.as_slice() {
                    [lo, "<=", var, "<=", hi] => {
                        lo.parse::<f64>().expect("lower bound");
                        hi.parse::<f64>().expect("upper bound");
                        var
                    }
                    [var, ">=", value] => {
                        value.parse::<f64>().expect("bound value");
                        var
                    }
                    _ => panic!("unrecognized bound line: {line}"),
                };
                bounds.push((*var).to_owned());
            }
            ("binaries", _) => {
                binaries.extend(line.split_whitespace().map(str::to_owned));
            }
            ("done", _) => panic!("content after End: {line}"),
            _ => panic!("line outside any section: {line}"),
        }
    }
    assert_eq!(section, "done", "missing End");
    LpFile {
        objective_vars,
        rows,
        bounds,
        binaries,
    }
}

fn parse_row(line: &str) -> LpRow {
    let (name, body) = line
        .split_once(':')
        .unwrap_or_else(|| panic!("constraint without name: {line}"));
    let tokens: Vec<&str> = body.split_whitespace().collect();
    let op_at = tokens
        .iter()
        .position(|t| *t == ">=" || *t == "<=" || *t == "=")
        .unwrap_or_else(|| panic!("constraint without comparator: {line}"));
    assert_eq!(tokens.len(), op_at + 2, "trailing tokens in: {line}");
    let rhs: f64 = tokens[op_at + 1]
        .parse()
        .unwrap_or_else(|_| panic!("bad rhs in: {line}"));
    let mut vars = Vec::new();
    let mut expect_term = true;
    let mut i = 0;
    while i < op_at {
        let t = tokens[i];
        if t == "+" || t == "-" {
            assert!(!expect_term, "dangling sign in: {line}");
            expect_term = true;
            i += 1;
            continue;
        }
        // A term is either "var" or "coefficient var".
        if t.parse::<f64>().is_ok() {
            i += 1;
            assert!(i < op_at, "coefficient without variable in: {line}");
        }
        vars.push(tokens[i].to_owned());
        expect_term = false;
        i += 1;
    }
    assert!(!expect_term, "empty constraint body in: {line}");
    LpRow {
        name: name.trim().to_owned(),
        vars,
        op: tokens[op_at].to_owned(),
        rhs,
    }
}

/// Scratch directory unique to one test, removed on drop.
pub struct TempDir {
    path: PathBuf,
}

impl TempDir {
    pub fn new(tag: &str) -> Self {
        let path = std::env::temp_dir().join(format!("nanip-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&path).expect("create scratch dir");
        TempDir { path }
    }

    pub fn file(&self, name: &str) -> PathBuf {
        self.path.join(name)
    }

    pub fn write(&self, name: &str, content: &str) -> PathBuf {
        let p = self.file(name);
        std::fs::write(&p, content).expect("write scratch file");
        p
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.path);
    }
}
