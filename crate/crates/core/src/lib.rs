//! Betweenness structures of finite connected graphs: the derived ternary
//! relation, a first-order formula language evaluated over it, direct
//! recognizers for the metric graph classes it defines, and an exact
//! solver for bounded back-and-forth games on such structures.

pub mod axioms;
pub mod corpus;
pub mod data;
pub mod ef;
pub mod error;
pub mod families;
pub mod formula;
pub mod graph;
pub mod metric;
pub mod predicates;
pub mod recognizers;
pub mod subgraph;

pub use error::{Error, Result};
pub use graph::Graph;
pub use metric::MetricOracle;
