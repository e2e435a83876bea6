//! Constructions of uniform hypergraphs with large girth.
//!
//! The crate has four layers:
//!
//! * [`hypergraph`], [`format`] and [`girth`]: value types, bit-exact text
//!   formats, exact girth computation and an exhaustive girth oracle.
//! * [`geometry`]: incidence graphs of small generalized polygons
//!   (projective planes, symplectic quadrangles, split Cayley hexagons) and
//!   a seeded greedy high-girth bipartite generator.
//! * [`transform`]: the neighborhood hypergraph of a bipartite graph, edge
//!   substitution, edge splitting and the recursive build.
//! * [`planner`]: exact big-integer arithmetic for the parameter sequences,
//!   edge-count bounds, parameter selection and certificates of the
//!   recursive construction at sizes far beyond what can be materialized.

pub mod error;
pub mod format;
pub mod geometry;
pub mod girth;
pub mod hypergraph;
pub mod planner;
pub mod transform;

pub use error::{Classify, ErrorKind};
pub use girth::{
    girth_bipartite, girth_hypergraph, girth_oracle, girth_oracle_with_budget, BergeCycle, Girth,
    GirthReport, Node, Witness,
};
pub use hypergraph::{incidence_graph, validate, BipartiteGraph, Hypergraph, StructureReport, VertexId};
