//! Spectral extremal problems for K_{s,t}-minor-free graphs: graph
//! constructions, A_α spectral radii, minor testing, majorization and
//! exhaustive small-instance search.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod majorization;
pub mod minor;
pub mod search;
pub mod spectral;

pub use error::{Error, Result, RotationError};
pub use graph::{DegreeSequence, Graph, VertexSet, MAX_VERTICES};
