//! Undirected simple graphs with dense integer node ids.
//!
//! Graphs are immutable after construction and every solver treats them as
//! read-only, so values can be shared freely across concurrent runs.
//!
//! The text interchange format is an edge list: UTF-8, one edge per line as
//! `u v`, lines starting with `#` are comments, blank lines are ignored.
//! Serialization writes each edge once with `u < v`, sorted lexicographically.
//! The format cannot express isolated nodes, so serializing a graph that has
//! one is rejected rather than silently dropping the node.

use std::collections::BTreeSet;
use std::io;

use crate::error::{Error, Result};

/// Undirected simple graph over node ids `0..n`.
///
/// Invariants, established at construction and never mutated:
/// - no self-loops and no duplicate edges,
/// - `u` appears in `neighbors(v)` exactly when `v` appears in `neighbors(u)`,
/// - every adjacency list is sorted ascending, giving deterministic iteration,
/// - `m` equals half the degree sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` nodes from an edge list. Duplicate edges collapse
    /// to one; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at node {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) references a node outside 0..{n}"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &set {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            m: set.len(),
            adjacency,
        })
    }

    /// Number of nodes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Neighbor ids of `v`, sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adjacency[u] {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Node degrees sorted ascending. Length `n`, sum `2m`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// True when every node is reachable from every other (vacuously true for
    /// zero or one node).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Parses the edge-list text format. The resulting graph spans ids
    /// `0..=max_id`; ids must be dense, since an id that appears on no edge
    /// line would be indistinguishable from an absent node.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut max_id: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two node ids, found {} tokens", tokens.len()),
                });
            }
            let mut ids = [0usize; 2];
            for (slot, tok) in ids.iter_mut().zip(&tokens) {
                *slot = tok.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("'{tok}' is not a non-negative integer node id"),
                })?;
            }
            let (u, v) = (ids[0], ids[1]);
            if u == v {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("self-loop {u} {v} is not allowed"),
                });
            }
            max_id = Some(max_id.unwrap_or(0).max(u).max(v));
            edges.push((u, v));
        }
        let n = max_id.map_or(0, |id| id + 1);
        let g = Graph::from_edges(n, &edges)?;
        if let Some(missing) = (0..n).find(|&v| g.degree(v) == 0) {
            return Err(Error::InvalidInput(format!(
                "node ids must be dense 0..={}: id {missing} appears on no edge line",
                n - 1
            )));
        }
        Ok(g)
    }

    /// Writes the edge-list format. Fails if the graph has an isolated node,
    /// which the format cannot represent.
    pub fn write_edge_list<W: io::Write>(&self, w: &mut W) -> Result<()> {
        if let Some(v) = (0..self.n).find(|&v| self.degree(v) == 0) {
            return Err(Error::InvalidInput(format!(
                "node {v} has no edges; the edge-list format cannot represent isolated nodes"
            )));
        }
        for (u, v) in self.edges() {
            writeln!(w, "{u} {v}")?;
        }
        Ok(())
    }

    /// Edge-list text, same contract as [`Graph::write_edge_list`].
    pub fn to_edge_list(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf)?;
        Ok(String::from_utf8(buf).expect("edge list is ASCII"))
    }
}
