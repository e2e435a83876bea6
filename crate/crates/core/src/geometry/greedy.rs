//! Seeded greedy bipartite graphs with a girth floor.
//!
//! All `n_left * n_right` candidate incidences are shuffled once with a
//! seeded ChaCha8 generator and scanned in that order. A candidate `(u, v)`
//! is accepted when `v` still has spare degree and the current distance from
//! `u` to `v` is at least `target_girth - 1`, so the new edge closes no cycle
//! shorter than `target_girth`. Distances only shrink as edges are added, so
//! one pass leaves no acceptable candidate behind.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::GeometryError;
use crate::hypergraph::{BipartiteGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GreedyParams {
    pub n_left: usize,
    pub n_right: usize,
    pub right_degree: usize,
    pub target_girth: u32,
    pub seed: u64,
}

impl GreedyParams {
    pub fn check(&self) -> Result<(), GeometryError> {
        if self.n_left == 0 || self.n_right == 0 || self.right_degree == 0 {
            return Err(GeometryError::BadGreedyParams(
                "left, right and degree must be positive".into(),
            ));
        }
        if self.target_girth < 4 || self.target_girth % 2 != 0 {
            return Err(GeometryError::BadGreedyParams(format!(
                "target girth must be even and >= 4, got {}",
                self.target_girth
            )));
        }
        Ok(())
    }
}

/// What the greedy pass achieved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyReport {
    pub params: GreedyParams,
    pub incidences: usize,
    /// Right degree -> number of right vertices with that degree.
    pub right_degree_histogram: BTreeMap<usize, usize>,
    pub left_degree_histogram: BTreeMap<usize, usize>,
    /// `Σ_v (right_degree - deg v)`; zero iff every right vertex is full.
    pub shortfall: usize,
}

impl GreedyReport {
    pub fn is_full(&self) -> bool {
        self.shortfall == 0
    }
}

impl fmt::Display for GreedyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hist = |h: &BTreeMap<usize, usize>| {
            h.iter()
                .map(|(d, c)| format!("{d}:{c}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(
            f,
            "greedy left {} right {} deg {} girth {} seed {}",
            self.params.n_left,
            self.params.n_right,
            self.params.right_degree,
            self.params.target_girth,
            self.params.seed
        )?;
        writeln!(f, "incidences {}", self.incidences)?;
        writeln!(f, "right-degrees {}", hist(&self.right_degree_histogram))?;
        writeln!(f, "left-degrees {}", hist(&self.left_degree_histogram))?;
        write!(f, "shortfall {}", self.shortfall)
    }
}

pub fn greedy_high_girth_bipartite(
    params: GreedyParams,
) -> Result<(BipartiteGraph, GreedyReport), GeometryError> {
    params.check()?;
    let GreedyParams {
        n_left,
        n_right,
        right_degree,
        target_girth,
        seed,
    } = params;

    let mut candidates: Vec<(VertexId, VertexId)> = (0..n_left as VertexId)
        .flat_map(|u| (0..n_right as VertexId).map(move |v| (u, v)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    candidates.shuffle(&mut rng);

    // unified ids: left u -> u, right v -> n_left + v
    let total = n_left + n_right;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut dist = vec![u32::MAX; total];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    let mut accepted = Vec::new();
    let max_dist = target_girth - 2;

    for (u, v) in candidates {
        let (a, b) = (u as usize, n_left + v as usize);
        if adj[b].len() >= right_degree {
            continue;
        }
        if within(&adj, a, b, max_dist, &mut dist, &mut touched, &mut queue) {
            continue;
        }
        adj[a].push(b);
        adj[b].push(a);
        accepted.push((u, v));
    }

    let graph = BipartiteGraph::new(n_left, n_right, accepted).expect("ids are in range");
    let mut right_degree_histogram = BTreeMap::new();
    let mut shortfall = 0;
    for d in graph.right_degrees() {
        *right_degree_histogram.entry(d).or_insert(0) += 1;
        shortfall += right_degree - d;
    }
    let mut left_degree_histogram = BTreeMap::new();
    for d in graph.left_degrees() {
        *left_degree_histogram.entry(d).or_insert(0) += 1;
    }
    let report = GreedyReport {
        params,
        incidences: graph.num_incidences(),
        right_degree_histogram,
        left_degree_histogram,
        shortfall,
    };
    Ok((graph, report))
}

/// Is `to` within distance `max_dist` of `from`?
fn within(
    adj: &[Vec<usize>],
    from: usize,
    to: usize,
    max_dist: u32,
    dist: &mut [u32],
    touched: &mut Vec<usize>,
    queue: &mut VecDeque<usize>,
) -> bool {
    for &t in touched.iter() {
        dist[t] = u32::MAX;
    }
    touched.clear();
    queue.clear();
    dist[from] = 0;
    touched.push(from);
    queue.push_back(from);
    while let Some(x) = queue.pop_front() {
        if x == to {
            return true;
        }
        let dx = dist[x];
        if dx == max_dist {
            continue;
        }
        for &y in &adj[x] {
            if dist[y] == u32::MAX {
                dist[y] = dx + 1;
                touched.push(y);
                queue.push_back(y);
            }
        }
    }
    false
}
