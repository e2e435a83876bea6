//! Exact girth of bipartite graphs and hypergraphs.
//!
//! Bipartite girth is found by a breadth-first search from every vertex: a
//! non-tree edge `(x, y)` met during the search from `s` closes a cycle of
//! length at most `dist(x) + dist(y) + 1`, and the minimum over all starts is
//! the girth. Hypergraph girth is half the girth of the incidence graph.
//!
//! [`girth_oracle`] is an independent exhaustive search straight from the
//! definition of a cycle (distinct vertices `v_0..v_{k-1}`, distinct edges
//! `e_0..e_{k-1}`, `{v_i, v_{i+1}} ⊆ e_i`), used to cross-check the fast path.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::error::{Classify, ErrorKind};
use crate::hypergraph::{incidence_graph, BipartiteGraph, Hypergraph, VertexId};

/// Default incidence budget for [`girth_oracle`].
pub const DEFAULT_ORACLE_INCIDENCES: usize = 2000;
/// Default cycle-length cap for [`girth_oracle`].
pub const DEFAULT_ORACLE_MAX_LEN: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(u32),
    /// The structure has no cycle at all.
    Infinite,
    /// An exhaustive search found no cycle of length up to the given bound.
    NoneUpTo(u32),
}

impl Girth {
    pub fn finite(self) -> Option<u32> {
        match self {
            Girth::Finite(g) => Some(g),
            _ => None,
        }
    }

    /// True when every cycle (if any) has length at least `g`.
    pub fn at_least(self, g: u32) -> bool {
        match self {
            Girth::Finite(k) => k >= g,
            Girth::Infinite => true,
            Girth::NoneUpTo(bound) => bound + 1 >= g,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
            Girth::NoneUpTo(b) => write!(f, "inf-up-to {b}"),
        }
    }
}

/// Vertex of a bipartite graph, tagged with its side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Left(VertexId),
    Right(VertexId),
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Left(u) => write!(f, "l{u}"),
            Node::Right(v) => write!(f, "r{v}"),
        }
    }
}

/// A hypergraph cycle: `{vertices[i], vertices[i+1 mod k]} ⊆ edges[i]`.
///
/// Edges are indices into the hypergraph's canonical edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BergeCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<usize>,
}

impl BergeCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the cycle against the definition, directly on `h`.
    pub fn is_valid_in(&self, h: &Hypergraph) -> bool {
        let k = self.vertices.len();
        if k < 2 || self.edges.len() != k {
            return false;
        }
        if !all_distinct(&self.vertices) || !all_distinct(&self.edges) {
            return false;
        }
        (0..k).all(|i| {
            let Some(edge) = h.edges().get(self.edges[i]) else {
                return false;
            };
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % k];
            edge.binary_search(&a).is_ok() && edge.binary_search(&b).is_ok()
        })
    }
}

impl fmt::Display for BergeCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in self.vertices.iter().zip(&self.edges) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "v{v} e{e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    /// Closed vertex sequence of a bipartite graph.
    Graph(Vec<Node>),
    Berge(BergeCycle),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Graph(nodes) => {
                let parts: Vec<String> = nodes.iter().map(Node::to_string).collect();
                f.write_str(&parts.join(" "))
            }
            Witness::Berge(c) => c.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GirthReport {
    pub girth: Girth,
    /// A shortest cycle; present iff the girth is finite.
    pub witness: Option<Witness>,
}

fn all_distinct<T: Ord + Clone>(xs: &[T]) -> bool {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.windows(2).all(|w| w[0] != w[1])
}

/// Checks a closed walk in `g` is a cycle: even length ≥ 4, alternating
/// sides, distinct vertices, consecutive vertices adjacent.
pub fn is_graph_cycle(g: &BipartiteGraph, nodes: &[Node]) -> bool {
    let k = nodes.len();
    if k < 4 || k % 2 != 0 || !all_distinct(nodes) {
        return false;
    }
    (0..k).all(|i| match (nodes[i], nodes[(i + 1) % k]) {
        (Node::Left(u), Node::Right(v)) | (Node::Right(v), Node::Left(u)) => {
            g.incidences().binary_search(&(u, v)).is_ok()
        }
        _ => false,
    })
}

const UNSEEN: u32 = u32::MAX;

struct Best {
    len: u32,
    x: usize,
    y: usize,
}

/// Shortest cycle length of a bipartite graph, with a witness cycle.
///
/// The result is deterministic: among all shortest cycles, the witness is
/// the first one closed by the search from the smallest start vertex.
pub fn girth_bipartite(g: &BipartiteGraph) -> GirthReport {
    let nl = g.n_left();
    let total = nl + g.n_right();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); total];
    for &(u, v) in g.incidences() {
        adj[u as usize].push(nl as u32 + v);
        adj[nl + v as usize].push(u);
    }
    for a in &mut adj {
        a.sort_unstable();
    }

    let mut dist = vec![UNSEEN; total];
    let mut parent = vec![UNSEEN; total];
    let mut touched: Vec<usize> = Vec::new();
    let mut queue = VecDeque::new();
    let mut best: Option<Best> = None;
    let mut witness: Option<Vec<Node>> = None;

    for s in 0..total {
        if adj[s].len() < 2 {
            // a vertex of degree < 2 lies on no cycle
            continue;
        }
        for &t in &touched {
            dist[t] = UNSEEN;
            parent[t] = UNSEEN;
        }
        touched.clear();
        queue.clear();
        dist[s] = 0;
        touched.push(s);
        queue.push_back(s);
        let mut improved = false;
        'bfs: while let Some(x) = queue.pop_front() {
            let dx = dist[x];
            if let Some(b) = &best {
                // any cycle closed from depth dx has length >= 2*dx
                if 2 * dx >= b.len {
                    break;
                }
            }
            for &y in &adj[x] {
                let y = y as usize;
                if dist[y] == UNSEEN {
                    dist[y] = dx + 1;
                    parent[y] = x as u32;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y as u32 {
                    let len = dx + dist[y] + 1;
                    if best.as_ref().is_none_or(|b| len < b.len) {
                        best = Some(Best { len, x, y });
                        improved = true;
                        if 2 * dx >= len {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        if improved {
            // reconstruct while the parent array still describes this search
            let b = best.as_ref().expect("improved implies a cycle");
            let cycle = extract_cycle(&parent, b.x, b.y);
            let nodes = cycle
                .into_iter()
                .map(|i| {
                    if i < nl {
                        Node::Left(i as VertexId)
                    } else {
                        Node::Right((i - nl) as VertexId)
                    }
                })
                .collect::<Vec<_>>();
            witness = Some(nodes);
        }
    }
    match best {
        None => GirthReport {
            girth: Girth::Infinite,
            witness: None,
        },
        Some(b) => {
            let nodes = witness.expect("witness recorded with best");
            // only a globally shortest closed walk is guaranteed to be simple
            assert_eq!(nodes.len() as u32, b.len, "witness length disagrees with girth");
            GirthReport {
                girth: Girth::Finite(b.len),
                witness: Some(Witness::Graph(nodes)),
            }
        }
    }
}

/// Closes the tree paths to `x` and `y` through the edge `x–y`, cut at their
/// lowest common ancestor so the result is always a simple cycle.
fn extract_cycle(parent: &[u32], x: usize, y: usize) -> Vec<usize> {
    let root_path = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != UNSEEN {
            v = parent[v] as usize;
            path.push(v);
        }
        path.reverse();
        path
    };
    let px = root_path(x);
    let py = root_path(y);
    let common = px.iter().zip(&py).take_while(|(a, b)| a == b).count();
    let lca = common - 1;
    let mut cycle: Vec<usize> = px[lca..].to_vec();
    cycle.extend(py[lca + 1..].iter().rev());
    cycle
}

/// Girth of a hypergraph via its incidence graph.
///
/// Cycles of length `2k` in the incidence graph are exactly the cycles of
/// length `k` in the hypergraph, so the girth is halved and the witness is
/// read off as alternating vertex/edge sequences.
pub fn girth_hypergraph(h: &Hypergraph) -> GirthReport {
    let report = girth_bipartite(&incidence_graph(h));
    let girth = match report.girth {
        Girth::Finite(g) => Girth::Finite(g / 2),
        other => other,
    };
    let witness = report.witness.map(|w| match w {
        Witness::Graph(nodes) => Witness::Berge(to_berge(&nodes)),
        other => other,
    });
    GirthReport { girth, witness }
}

fn to_berge(nodes: &[Node]) -> BergeCycle {
    let start = nodes
        .iter()
        .position(|n| matches!(n, Node::Left(_)))
        .expect("a bipartite cycle has left vertices");
    let mut vertices = Vec::with_capacity(nodes.len() / 2);
    let mut edges = Vec::with_capacity(nodes.len() / 2);
    for i in 0..nodes.len() {
        match nodes[(start + i) % nodes.len()] {
            Node::Left(v) => vertices.push(v),
            Node::Right(e) => edges.push(e as usize),
        }
    }
    BergeCycle { vertices, edges }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle needs max_len >= 2, got {0}")]
    MaxLenTooSmall(u32),
    #[error("oracle budget exceeded: {incidences} incidences > budget {budget}")]
    BudgetExceeded { incidences: usize, budget: usize },
}

impl Classify for OracleError {
    fn kind(&self) -> ErrorKind {
        match self {
            OracleError::MaxLenTooSmall(_) => ErrorKind::Precondition,
            OracleError::BudgetExceeded { .. } => ErrorKind::Resource,
        }
    }
}

/// Exhaustive cycle search with the default incidence budget.
pub fn girth_oracle(h: &Hypergraph, max_len: u32) -> Result<GirthReport, OracleError> {
    girth_oracle_with_budget(h, max_len, DEFAULT_ORACLE_INCIDENCES)
}

/// Finds the shortest cycle of length `2..=max_len` by depth-first search
/// over vertex/edge sequences.
///
/// Each cycle is enumerated from its smallest vertex. Returns
/// [`Girth::NoneUpTo`] when no cycle of length `<= max_len` exists. Inputs
/// with more than `budget` incidences are refused rather than searched.
pub fn girth_oracle_with_budget(
    h: &Hypergraph,
    max_len: u32,
    budget: usize,
) -> Result<GirthReport, OracleError> {
    if max_len < 2 {
        return Err(OracleError::MaxLenTooSmall(max_len));
    }
    let incidences = h.num_incidences();
    if incidences > budget {
        return Err(OracleError::BudgetExceeded { incidences, budget });
    }
    let mut search = OracleSearch {
        h,
        incident: vertex_edges(h),
        used_vertex: vec![false; h.num_vertices()],
        used_edge: vec![false; h.num_edges()],
        vertices: Vec::new(),
        edges: Vec::new(),
        limit: max_len as usize,
        best: None,
    };
    for v0 in 0..h.num_vertices() as VertexId {
        search.vertices.push(v0);
        search.used_vertex[v0 as usize] = true;
        search.extend(v0);
        search.used_vertex[v0 as usize] = false;
        search.vertices.pop();
        if search.best.as_ref().is_some_and(|c| c.len() == 2) {
            break;
        }
    }
    Ok(match search.best {
        Some(cycle) => GirthReport {
            girth: Girth::Finite(cycle.len() as u32),
            witness: Some(Witness::Berge(cycle)),
        },
        None => GirthReport {
            girth: Girth::NoneUpTo(max_len),
            witness: None,
        },
    })
}

fn vertex_edges(h: &Hypergraph) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); h.num_vertices()];
    for (j, e) in h.edges().iter().enumerate() {
        for &v in e {
            inc[v as usize].push(j);
        }
    }
    inc
}

struct OracleSearch<'a> {
    h: &'a Hypergraph,
    incident: Vec<Vec<usize>>,
    used_vertex: Vec<bool>,
    used_edge: Vec<bool>,
    vertices: Vec<VertexId>,
    edges: Vec<usize>,
    /// Longest cycle still worth finding.
    limit: usize,
    best: Option<BergeCycle>,
}

impl OracleSearch<'_> {
    fn extend(&mut self, v0: VertexId) {
        let len = self.vertices.len();
        let cur = *self.vertices.last().expect("path is never empty");
        if len >= 2 {
            let closing = self.incident[cur as usize].iter().copied().find(|&e| {
                !self.used_edge[e] && self.h.edges()[e].binary_search(&v0).is_ok()
            });
            if let Some(e) = closing {
                let mut edges = self.edges.clone();
                edges.push(e);
                self.best = Some(BergeCycle {
                    vertices: self.vertices.clone(),
                    edges,
                });
                self.limit = len - 1;
                return;
            }
        }
        if len + 1 > self.limit {
            return;
        }
        for ei in 0..self.incident[cur as usize].len() {
            let e = self.incident[cur as usize][ei];
            if self.used_edge[e] {
                continue;
            }
            self.used_edge[e] = true;
            self.edges.push(e);
            for wi in 0..self.h.edges()[e].len() {
                let w = self.h.edges()[e][wi];
                if w <= v0 || self.used_vertex[w as usize] {
                    continue;
                }
                self.used_vertex[w as usize] = true;
                self.vertices.push(w);
                self.extend(v0);
                self.vertices.pop();
                self.used_vertex[w as usize] = false;
                if self.vertices.len() + 1 > self.limit {
                    break;
                }
            }
            self.edges.pop();
            self.used_edge[e] = false;
            if self.vertices.len() + 1 > self.limit {
                break;
            }
        }
    }
}
