//! Toolkit for the neighbor-aided network installation problem: given a
//! graph and a cost function f over installed-neighbor counts, installing
//! the nodes in order sigma costs the sum of f(number of already-installed
//! neighbors) over the steps, and the goal is a cheap order.
//!
//! The crate provides:
//!
//! - sequence-cost evaluation with per-step breakdowns ([`cost`]),
//! - exact optima by subset dynamic programming up to 26 nodes and by
//!   permutation enumeration as an independent oracle ([`exact`]),
//! - cost-greedy, degree-descending, and random heuristics ([`heuristics`]),
//! - Jensen, degree-capped relaxation, and greedy upper bounds ([`bounds`]),
//! - expected costs on Erdos-Renyi random graphs ([`expectation`]),
//! - integer-program export in LP file format ([`ip`]),
//! - seeded graph generators ([`generate`]) and a parallel benchmark sweep
//!   comparing all of the above ([`bench`]),
//! - a command-line front end over every component ([`cli`]).
//!
//! Everything randomized takes an explicit seed and is bit-reproducible;
//! see the `examples/` directory for worked tours of each piece.

pub mod bench;
pub mod bounds;
pub mod cli;
pub mod cost;
pub mod error;
pub mod exact;
pub mod expectation;
pub mod generate;
pub mod graph;
pub mod heuristics;
pub mod ip;
pub mod seed;

pub use cost::{CostFunction, CostReport, InstallSequence};
pub use error::{Error, Result};
pub use graph::Graph;
pub use seed::Seed;
