//! Exact metric invariants for finite connected graphs.
//!
//! The crate measures, in exact integer and half-integer arithmetic, the
//! quantities that relate a graph metric to a tree metric: the four-point
//! value 2δ, geodesic-triangle slimness ς, interval thinness τ, and the bow
//! profile μ*(λ) (the least μ for which gluing shortest paths overlapping in
//! more than λ edges loses at most μ), together with the metric-triangle
//! structure and membership in the classical metric graph classes. On top
//! of the measurements sits a verifier that instantiates a catalog of
//! inequalities tying all of these together and reports a replayable
//! witness whenever one fails, plus a counterexample search that drives the
//! verifier over graph6 streams or random edge mutations.
//!
//! Start with [`graph::Graph`] and [`report::compute_report`], or see the
//! `examples/` directory for one runnable program per capability.

pub mod classes;
pub mod cli;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod halfint;
pub mod invariants;
pub mod report;
pub mod search;
pub mod transforms;
pub mod verify;
pub mod triangles;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, Vertex, VertexSet};
pub use halfint::HalfInt;
pub use report::{Caps, InvariantReport};
