//! Hypergraph and bipartite-graph value types.
//!
//! Both types are kept in canonical form at all times: vertex ids are dense
//! and 0-based, edges are strictly increasing vertex lists sorted
//! lexicographically, and incidences are sorted `(left, right)` pairs. Two
//! values are equal iff their canonical serializations are equal.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::error::{Classify, ErrorKind};

/// Vertex (or right-vertex) identifier.
pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("edge #{index} is empty")]
    EmptyEdge { index: usize },
    #[error("edge #{index} {edge:?} contains vertex {vertex} >= {num_vertices}")]
    VertexOutOfRange {
        index: usize,
        edge: Vec<VertexId>,
        vertex: VertexId,
        num_vertices: usize,
    },
    #[error("edge #{index} {edge:?} repeats vertex {vertex}")]
    RepeatedVertex {
        index: usize,
        edge: Vec<VertexId>,
        vertex: VertexId,
    },
    #[error("edge #{index} {edge:?} duplicates edge #{first}")]
    DuplicateEdge {
        index: usize,
        first: usize,
        edge: Vec<VertexId>,
    },
    #[error("incidence ({left}, {right}) out of range for {n_left}+{n_right} graph")]
    IncidenceOutOfRange {
        left: VertexId,
        right: VertexId,
        n_left: usize,
        n_right: usize,
    },
    #[error("duplicate incidence ({left}, {right})")]
    DuplicateIncidence { left: VertexId, right: VertexId },
}

impl Classify for StructureError {
    fn kind(&self) -> ErrorKind {
        ErrorKind::Precondition
    }
}

/// A finite hypergraph without multiple edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    num_vertices: usize,
    edges: Vec<Vec<VertexId>>,
}

impl Hypergraph {
    /// Builds a hypergraph, canonicalizing edge order.
    ///
    /// Vertices inside an edge may be given in any order but must be
    /// distinct. Errors name the offending edge by its input position.
    pub fn new(num_vertices: usize, edges: Vec<Vec<VertexId>>) -> Result<Self, StructureError> {
        let mut keyed = Vec::with_capacity(edges.len());
        for (index, mut edge) in edges.into_iter().enumerate() {
            if edge.is_empty() {
                return Err(StructureError::EmptyEdge { index });
            }
            edge.sort_unstable();
            if let Some(&vertex) = edge.iter().find(|&&v| v as usize >= num_vertices) {
                return Err(StructureError::VertexOutOfRange {
                    index,
                    edge,
                    vertex,
                    num_vertices,
                });
            }
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                let vertex = w[0];
                return Err(StructureError::RepeatedVertex { index, edge, vertex });
            }
            keyed.push((edge, index));
        }
        keyed.sort();
        for w in keyed.windows(2) {
            if w[0].0 == w[1].0 {
                let (first, index) = if w[0].1 < w[1].1 {
                    (w[0].1, w[1].1)
                } else {
                    (w[1].1, w[0].1)
                };
                return Err(StructureError::DuplicateEdge {
                    index,
                    first,
                    edge: w[0].0.clone(),
                });
            }
        }
        Ok(Hypergraph {
            num_vertices,
            edges: keyed.into_iter().map(|(e, _)| e).collect(),
        })
    }

    pub fn empty(num_vertices: usize) -> Self {
        Hypergraph {
            num_vertices,
            edges: Vec::new(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> &[Vec<VertexId>] {
        &self.edges
    }

    pub fn num_incidences(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.num_vertices];
        for e in &self.edges {
            for &v in e {
                deg[v as usize] += 1;
            }
        }
        deg
    }

    /// Smallest edge size, or `None` for an edgeless hypergraph.
    pub fn min_edge_size(&self) -> Option<usize> {
        self.edges.iter().map(Vec::len).min()
    }

    /// Same edges on `num_vertices` vertices; the new vertices are isolated.
    pub fn with_num_vertices(&self, num_vertices: usize) -> Option<Self> {
        (num_vertices >= self.num_vertices).then(|| Hypergraph {
            num_vertices,
            edges: self.edges.clone(),
        })
    }
}

/// Bipartite graph with color classes `0..n_left` and `0..n_right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    n_left: usize,
    n_right: usize,
    incidences: Vec<(VertexId, VertexId)>,
}

impl BipartiteGraph {
    pub fn new(
        n_left: usize,
        n_right: usize,
        mut incidences: Vec<(VertexId, VertexId)>,
    ) -> Result<Self, StructureError> {
        incidences.sort_unstable();
        for &(left, right) in &incidences {
            if left as usize >= n_left || right as usize >= n_right {
                return Err(StructureError::IncidenceOutOfRange {
                    left,
                    right,
                    n_left,
                    n_right,
                });
            }
        }
        if let Some(w) = incidences.windows(2).find(|w| w[0] == w[1]) {
            let (left, right) = w[0];
            return Err(StructureError::DuplicateIncidence { left, right });
        }
        Ok(BipartiteGraph {
            n_left,
            n_right,
            incidences,
        })
    }

    pub fn n_left(&self) -> usize {
        self.n_left
    }

    pub fn n_right(&self) -> usize {
        self.n_right
    }

    /// Sorted `(left, right)` pairs.
    pub fn incidences(&self) -> &[(VertexId, VertexId)] {
        &self.incidences
    }

    pub fn num_incidences(&self) -> usize {
        self.incidences.len()
    }

    /// Sorted neighbor lists of the left vertices.
    pub fn left_adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.n_left];
        for &(u, v) in &self.incidences {
            adj[u as usize].push(v);
        }
        adj
    }

    /// Sorted neighbor lists of the right vertices (the neighborhoods `N_v`).
    pub fn right_adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.n_right];
        for &(u, v) in &self.incidences {
            adj[v as usize].push(u);
        }
        adj
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        self.left_adjacency().iter().map(Vec::len).collect()
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        self.right_adjacency().iter().map(Vec::len).collect()
    }

    /// `Some((d_left, d_right))` when every left vertex has degree `d_left`
    /// and every right vertex has degree `d_right`.
    pub fn biregularity(&self) -> Option<(usize, usize)> {
        Some((common_value(&self.left_degrees())?, common_value(&self.right_degrees())?))
    }
}

fn common_value(xs: &[usize]) -> Option<usize> {
    match xs.split_first() {
        None => Some(0),
        Some((first, rest)) => rest.iter().all(|x| x == first).then_some(*first),
    }
}

/// Uniformity, regularity and isolated-vertex count of a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub num_vertices: usize,
    pub num_edges: usize,
    /// Common edge size; absent for mixed sizes and for an empty edge set.
    pub uniformity: Option<usize>,
    /// Set when the edge set is empty, so uniformity holds only vacuously.
    pub vacuous_uniformity: bool,
    /// Common vertex degree; `Some(0)` for vertexless or edgeless inputs.
    pub regularity: Option<usize>,
    pub isolated: usize,
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |x: Option<usize>| x.map_or_else(|| "none".to_string(), |v| v.to_string());
        write!(
            f,
            "vertices {} edges {} uniformity {}{} regularity {} isolated {}",
            self.num_vertices,
            self.num_edges,
            opt(self.uniformity),
            if self.vacuous_uniformity { " (vacuous)" } else { "" },
            opt(self.regularity),
            self.isolated
        )
    }
}

pub fn validate(h: &Hypergraph) -> StructureReport {
    let degrees = h.degrees();
    let uniformity = match h.edges.split_first() {
        None => None,
        Some((first, rest)) => rest
            .iter()
            .all(|e| e.len() == first.len())
            .then_some(first.len()),
    };
    StructureReport {
        num_vertices: h.num_vertices,
        num_edges: h.edges.len(),
        uniformity,
        vacuous_uniformity: h.edges.is_empty(),
        regularity: common_value(&degrees),
        isolated: degrees.iter().filter(|&&d| d == 0).count(),
    }
}

/// Vertex–edge incidence graph: left = vertices, right = edges in canonical order.
pub fn incidence_graph(h: &Hypergraph) -> BipartiteGraph {
    let mut incidences: Vec<(VertexId, VertexId)> = h
        .edges
        .iter()
        .enumerate()
        .flat_map(|(j, e)| e.iter().map(move |&u| (u, j as VertexId)))
        .collect();
    incidences.sort_unstable();
    BipartiteGraph {
        n_left: h.num_vertices,
        n_right: h.edges.len(),
        incidences,
    }
}

/// Set of edges as a `BTreeSet`, handy for comparisons in tests and checks.
pub fn edge_set(h: &Hypergraph) -> BTreeSet<Vec<VertexId>> {
    h.edges.iter().cloned().collect()
}
