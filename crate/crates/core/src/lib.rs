//! Interval k-graphs and interval k-orders.
//!
//! Recognition oracles, representation validators, the constructive
//! transformations between interval, permutation, function-curve and order
//! models, and the exhaustive sweeps that cross-check them on small graphs.

pub mod comparability;
pub mod constructions;
pub mod graph;
pub mod harness;
pub mod order;
pub mod par;
pub mod recognition;
pub mod representations;

pub use graph::{Graph, GraphError, PartiteStructure, VertexSet};
pub use order::{ChainCover, Labeling, OrderError, Poset};
