//! Exact connected and 2-connected bipartite Turán numbers for long paths
//! and long cycles.
//!
//! * [`graph`]: bipartite graphs with bitset adjacency, graph6 and DOT I/O
//! * [`structure`]: connectivity and block decomposition
//! * [`search`]: exact longest path / circumference and maximal-path tools
//! * [`constructions`]: the extremal graph families
//! * [`formulas`]: closed-form extremal numbers
//! * [`oracle`]: exhaustive enumeration with isomorphism reduction

pub mod constructions;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod search;
pub mod structure;

pub use graph::{BipartiteGraph, GraphBuilder, GraphError};
