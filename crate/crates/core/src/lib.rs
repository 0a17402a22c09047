//! Perfect matchings in claw-free cubic bridgeless graphs.
//!
//! Every such graph on `n` vertices has more than `2^(n/12)` perfect
//! matchings. This crate decomposes a graph into its base multigraph,
//! expands cycle-space members of the base into 2-factors, and emits an
//! explicit family of distinct perfect matchings that beats the bound.
//! A brute-force oracle cross-checks every step.

pub mod cycle_space;
pub mod edge_set;
pub mod error;
pub mod expansion;
pub mod format;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod predicates;
pub mod structure;

pub use edge_set::EdgeSet;
pub use error::{Error, Result};
pub use graph::Multigraph;
