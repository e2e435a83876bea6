//! Girth-preserving operators on hypergraphs.
//!
//! * [`neighborhood_hypergraph`]: the hypergraph on the left class whose
//!   edges are the right-vertex neighborhoods. Its girth is half the girth
//!   of the bipartite graph.
//! * [`substitute_edges`]: replaces every host edge with vertex-disjoint
//!   copies of a template placed inside it. If host and template both have
//!   girth at least `g`, so does the result.
//! * [`split_edges`]: substitution with a single `r`-vertex edge as template,
//!   `⌊|u|/r⌋` copies per edge `u`.
//! * [`build_recursive`]: iterated substitution through a list of bases.
//!
//! Copies are laid out in sorted-position blocks: copy `j` sends template
//! vertex `t` to the `(j·|V_T| + t)`-th smallest vertex of the host edge.

use thiserror::Error;

use crate::error::{Classify, ErrorKind};
use crate::hypergraph::{BipartiteGraph, Hypergraph, StructureError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("right vertices {first} and {second} have the same neighborhood {neighborhood:?}")]
    DuplicateNeighborhood {
        first: VertexId,
        second: VertexId,
        neighborhood: Vec<VertexId>,
    },
    #[error("copy count must be positive")]
    ZeroCopies,
    #[error("host edge #{edge} has {size} vertices, {required} needed")]
    EdgeTooSmall {
        edge: usize,
        size: usize,
        required: usize,
    },
    #[error("substitution produced edge {edge:?} twice")]
    DuplicateEdge { edge: Vec<VertexId> },
    #[error("split size must be >= 2, got {0}")]
    SplitTooSmall(usize),
    #[error("recursive build needs {expected} copy counts for {bases} bases, got {got}")]
    CopyCountMismatch {
        bases: usize,
        expected: usize,
        got: usize,
    },
    #[error("stage {stage}: needs host edges of size {required}, smallest available is {available}")]
    StageIncompatible {
        stage: usize,
        required: usize,
        available: usize,
    },
    #[error("stage {stage}: {source}")]
    Stage {
        stage: usize,
        #[source]
        source: Box<TransformError>,
    },
}

impl Classify for TransformError {
    fn kind(&self) -> ErrorKind {
        match self {
            TransformError::DuplicateEdge { .. } => ErrorKind::Verification,
            TransformError::Stage { source, .. } => source.kind(),
            _ => ErrorKind::Precondition,
        }
    }
}

/// Edges are the nonempty right-vertex neighborhoods, on the left class.
///
/// Fails if two right vertices share a nonempty neighborhood, since the
/// hypergraph would then need a multiple edge.
pub fn neighborhood_hypergraph(g: &BipartiteGraph) -> Result<Hypergraph, TransformError> {
    let mut keyed: Vec<(Vec<VertexId>, VertexId)> = g
        .right_adjacency()
        .into_iter()
        .enumerate()
        .filter(|(_, n)| !n.is_empty())
        .map(|(v, n)| (n, v as VertexId))
        .collect();
    keyed.sort();
    if let Some(w) = keyed.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(TransformError::DuplicateNeighborhood {
            first: w[0].1,
            second: w[1].1,
            neighborhood: w[0].0.clone(),
        });
    }
    let edges = keyed.into_iter().map(|(n, _)| n).collect();
    Ok(Hypergraph::new(g.n_left(), edges).expect("neighborhoods are distinct and in range"))
}

/// Host, template and number of template copies per host edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionPlan {
    host: Hypergraph,
    template: Hypergraph,
    copies_per_edge: usize,
}

impl SubstitutionPlan {
    /// Checks that every host edge can hold `copies_per_edge` disjoint
    /// copies of the template's vertex set.
    pub fn new(
        host: Hypergraph,
        template: Hypergraph,
        copies_per_edge: usize,
    ) -> Result<Self, TransformError> {
        if copies_per_edge == 0 {
            return Err(TransformError::ZeroCopies);
        }
        let required = copies_per_edge * template.num_vertices();
        if let Some((edge, e)) = host.edges().iter().enumerate().find(|(_, e)| e.len() < required) {
            return Err(TransformError::EdgeTooSmall {
                edge,
                size: e.len(),
                required,
            });
        }
        Ok(SubstitutionPlan {
            host,
            template,
            copies_per_edge,
        })
    }

    pub fn host(&self) -> &Hypergraph {
        &self.host
    }

    pub fn template(&self) -> &Hypergraph {
        &self.template
    }

    pub fn copies_per_edge(&self) -> usize {
        self.copies_per_edge
    }

    /// `k · |E(template)| · |E(host)|`.
    pub fn predicted_edges(&self) -> usize {
        self.copies_per_edge * self.template.num_edges() * self.host.num_edges()
    }
}

fn place_copies(
    host: &Hypergraph,
    template: &Hypergraph,
    copies: impl Fn(&[VertexId]) -> usize,
) -> Result<Hypergraph, TransformError> {
    let tv = template.num_vertices();
    let mut out = Vec::new();
    for u in host.edges() {
        for j in 0..copies(u) {
            let block = &u[j * tv..(j + 1) * tv];
            for e in template.edges() {
                out.push(e.iter().map(|&t| block[t as usize]).collect());
            }
        }
    }
    Hypergraph::new(host.num_vertices(), out).map_err(|e| match e {
        StructureError::DuplicateEdge { edge, .. } => TransformError::DuplicateEdge { edge },
        other => unreachable!("copies stay inside valid host edges: {other}"),
    })
}

/// Replaces each host edge with `k` disjoint template copies.
///
/// The output keeps the host's vertex set, isolated vertices included.
pub fn substitute_edges(plan: &SubstitutionPlan) -> Result<Hypergraph, TransformError> {
    let k = plan.copies_per_edge;
    place_copies(&plan.host, &plan.template, |_| k)
}

/// Result of [`split_edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitOutcome {
    pub hypergraph: Hypergraph,
    /// Host edges with fewer than `r` vertices, which produced nothing.
    pub skipped_edges: usize,
}

impl SplitOutcome {
    /// Set when no edge survived the split.
    pub fn is_empty_warning(&self) -> bool {
        self.hypergraph.num_edges() == 0
    }
}

/// Cuts every edge `u` into `⌊|u|/r⌋` disjoint `r`-subsets.
pub fn split_edges(h: &Hypergraph, r: usize) -> Result<SplitOutcome, TransformError> {
    if r < 2 {
        return Err(TransformError::SplitTooSmall(r));
    }
    let single = single_edge_template(r);
    let hypergraph = place_copies(h, &single, |u| u.len() / r)?;
    let skipped_edges = h.edges().iter().filter(|e| e.len() < r).count();
    Ok(SplitOutcome {
        hypergraph,
        skipped_edges,
    })
}

/// Iterated substitution.
///
/// Stage 1 is the neighborhood hypergraph of `bases[0]`; stage `i` places
/// `copy_counts[i-2]` copies of stage `i-1` into every edge of the
/// neighborhood hypergraph of `bases[i-1]`.
pub fn build_recursive(
    bases: &[BipartiteGraph],
    copy_counts: &[usize],
) -> Result<Hypergraph, TransformError> {
    let expected = bases.len().saturating_sub(1);
    if bases.is_empty() || copy_counts.len() != expected {
        return Err(TransformError::CopyCountMismatch {
            bases: bases.len(),
            expected,
            got: copy_counts.len(),
        });
    }
    let stage_err = |stage: usize| {
        move |e: TransformError| TransformError::Stage {
            stage,
            source: Box::new(e),
        }
    };
    let mut current = neighborhood_hypergraph(&bases[0]).map_err(stage_err(1))?;
    for (i, (base, &k)) in bases[1..].iter().zip(copy_counts).enumerate() {
        let stage = i + 2;
        let host = neighborhood_hypergraph(base).map_err(stage_err(stage))?;
        let required = k * current.num_vertices();
        if let Some(available) = host.min_edge_size() {
            if available < required {
                return Err(TransformError::StageIncompatible {
                    stage,
                    required,
                    available,
                });
            }
        }
        let plan = SubstitutionPlan::new(host, current, k).map_err(stage_err(stage))?;
        current = substitute_edges(&plan).map_err(stage_err(stage))?;
    }
    Ok(current)
}

/// One edge on `r` vertices.
pub fn single_edge_template(r: usize) -> Hypergraph {
    Hypergraph::new(r, vec![(0..r as VertexId).collect()]).expect("single edge is well-formed")
}

/// A loose path of `len` edges of size `r`, consecutive edges sharing one
/// vertex: `{0..r-1}, {r-1..2r-2}, ...`. Acyclic, so its girth is infinite.
pub fn path_template(len: usize, r: usize) -> Option<Hypergraph> {
    if len == 0 || r < 2 {
        return None;
    }
    let step = r - 1;
    let n = len * step + 1;
    let edges = (0..len)
        .map(|i| ((i * step) as VertexId..=(i * step + step) as VertexId).collect())
        .collect();
    Hypergraph::new(n, edges).ok()
}
