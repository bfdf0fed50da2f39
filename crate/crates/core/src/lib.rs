//! Steiner distances, vertex connectivity and extremal graph search.

pub mod constructions;
pub mod extremal;
pub mod graph;
pub mod steiner;
mod subsets;

pub use extremal::{DegreeSemantics, Extremal, ExtremalQuery, ExtremalResult};
pub use graph::{Graph, GraphError, SparseGraph, VertexSet};
pub use steiner::{Dist, SteinerError, SteinerProfile, SteinerTable};
pub use subsets::{binomial, KSubsets};
