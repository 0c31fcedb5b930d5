//! Critical vertices, critical edges, and contraction-critical edges of
//! graphs: chromatic machinery with certificates, a complexity classifier
//! for single forbidden induced subgraphs, hardness-instance generators,
//! and machine-checked verification suites at desk scale.

pub mod chromatic;
pub mod criticality;
pub mod dimacs;
pub mod graph;
pub mod hfree;
pub(crate) mod matching;
pub mod random;
pub mod reductions;
pub mod verify;

pub use graph::{Edge, Graph, GraphError};
