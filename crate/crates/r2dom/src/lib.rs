//! Roman {2}-domination on graphs with few induced P4s.
//!
//! The solver decomposes a graph by modular decomposition and evaluates
//! closed formulas at every node: union and join rules at parallel and
//! series nodes, and per-type formulas at prime nodes (spiders and their
//! substitutions, paths, cycles and a fixed family of small graphs, and
//! prime split graphs). An exponential oracle provides ground truth.

pub mod formulas;
pub mod generators;
pub mod graph;
pub mod io;
pub mod md;
pub mod oracle;
pub mod recognize;
pub mod solver;
pub mod verify;

pub use graph::{DomCap, Graph, GraphError, R2Function, Span, Vertex};
