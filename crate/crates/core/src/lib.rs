//! Exact computation of separating sets and identification codes in graphs.
//!
//! Every separation property and code is a covering property of a
//! hypergraph built from neighborhood differences, so the numbers are
//! covering numbers computed by an exact branch-and-bound solver.

pub mod catalog;
pub mod error;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod kind;
pub mod reductions;
pub mod separation;
mod solver;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{AdmissibilityReport, Family, Graph};
pub use hypergraph::{CoverResult, Hypergraph};
pub use kind::{CodeKind, DominationKind, Kind, SeparationKind};
pub use vertex_set::{Vertex, VertexSet};
