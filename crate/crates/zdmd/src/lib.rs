//! Zero-divisor graphs of `Z_n`, barycentric subdivisions, and exact metric
//! dimension.
//!
//! The crate is organised in layers:
//!
//! - [`graph`]: simple undirected graphs on dense integer ids, BFS distances,
//!   subdivision operators, and structural predicates (tree, path, bipartite,
//!   independence, pendant-path legs).
//! - [`ring`]: zero divisors of `Z_n` and the zero-divisor graph on them
//!   (vertices are the nonzero zero divisors, edges join annihilating pairs).
//! - [`resolving`]: metric codes, resolving-set checks, and exact metric
//!   dimension via exhaustive subset scan or a pair-cover branch and bound,
//!   plus the independent variant and equidistant-family lower bounds.
//! - [`construction`]: the canonical labelled build of the barycentric
//!   subdivision of the zero-divisor graph of `Z_pq`, the closed-form
//!   resolving sets and coordinate formulas known for that family, and a
//!   verification harness that checks them against BFS ground truth.
//! - [`export`]: DOT and JSON graph formats.
//! - [`corpus`]: seeded random trees and connected graphs for test suites.
//!
//! The `zdmd` binary exposes all of this behind the `zdg`, `bs`, `md` and
//! `verify` subcommands; see the README for examples.

pub mod cli;
pub mod construction;
pub mod corpus;
pub mod export;
pub mod graph;
pub mod resolving;
pub mod ring;

pub use graph::{DistanceMatrix, Graph, GraphError, VertexId};
pub use resolving::{DimensionReport, MetricCode, ResolvingCertificate};
