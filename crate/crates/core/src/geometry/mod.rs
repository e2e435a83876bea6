//! Bipartite incidence graphs with prescribed girth.

mod field;
mod greedy;
mod polygons;

use thiserror::Error;

use crate::error::{Classify, ErrorKind};
use crate::hypergraph::BipartiteGraph;

pub use field::{is_prime, PrimeField, ProjectiveSpace};
pub use greedy::{greedy_high_girth_bipartite, GreedyParams, GreedyReport};
pub use polygons::{projective_plane, split_cayley_hexagon, symplectic_quadrangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{geometry}: order {q} outside supported range 2..={max}")]
    OrderOutOfRange {
        geometry: &'static str,
        q: u32,
        max: u32,
    },
    #[error("greedy parameters: {0}")]
    BadGreedyParams(String),
    #[error("{geometry}: construction self-check failed: {what}")]
    SelfCheck { geometry: &'static str, what: String },
}

impl Classify for GeometryError {
    fn kind(&self) -> ErrorKind {
        match self {
            GeometryError::SelfCheck { .. } => ErrorKind::Verification,
            _ => ErrorKind::Precondition,
        }
    }
}

/// Which generator to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeometrySpec {
    Plane { q: u32 },
    Quadrangle { q: u32 },
    Hexagon { q: u32 },
    Greedy(GreedyParams),
}

impl GeometrySpec {
    /// Runs the generator. The greedy report is present only for `Greedy`.
    pub fn build(&self) -> Result<(BipartiteGraph, Option<GreedyReport>), GeometryError> {
        match *self {
            GeometrySpec::Plane { q } => Ok((projective_plane(q)?, None)),
            GeometrySpec::Quadrangle { q } => Ok((symplectic_quadrangle(q)?, None)),
            GeometrySpec::Hexagon { q } => Ok((split_cayley_hexagon(q)?, None)),
            GeometrySpec::Greedy(p) => {
                let (g, r) = greedy_high_girth_bipartite(p)?;
                Ok((g, Some(r)))
            }
        }
    }

    /// Girth every output is guaranteed to reach.
    pub fn girth_floor(&self) -> u32 {
        match self {
            GeometrySpec::Plane { .. } => 6,
            GeometrySpec::Quadrangle { .. } => 8,
            GeometrySpec::Hexagon { .. } => 12,
            GeometrySpec::Greedy(p) => p.target_girth,
        }
    }
}
