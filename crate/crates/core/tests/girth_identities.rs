use hypergirth::geometry::{
    greedy_high_girth_bipartite, projective_plane, split_cayley_hexagon, symplectic_quadrangle,
    GreedyParams,
};
use hypergirth::transform::{neighborhood_hypergraph, substitute_edges, SubstitutionPlan};
use hypergirth::{
    girth_bipartite, girth_hypergraph, girth_oracle, BipartiteGraph, Girth, Hypergraph, VertexId,
    Witness,
};
use proptest::prelude::*;

/// Drops right vertices of degree < 2. They lie on no cycle, and two of
/// them can share a one-element neighborhood.
fn cyclic_core(g: &BipartiteGraph) -> BipartiteGraph {
    let deg = g.right_degrees();
    let mut index = vec![None; g.n_right()];
    let mut next = 0;
    for (v, &d) in deg.iter().enumerate() {
        if d >= 2 {
            index[v] = Some(next);
            next += 1;
        }
    }
    let incidences = g
        .incidences()
        .iter()
        .filter_map(|&(u, v)| index[v as usize].map(|w| (u, w as VertexId)))
        .collect();
    BipartiteGraph::new(g.n_left(), next, incidences).unwrap()
}

fn halving_holds(g: &BipartiteGraph) -> bool {
    let core = cyclic_core(g);
    let Ok(h) = neighborhood_hypergraph(&core) else {
        // repeated neighborhoods of size >= 2 close a 4-cycle, a 2-cycle upstairs
        return girth_bipartite(g).girth == Girth::Finite(4);
    };
    let doubled = match girth_hypergraph(&h).girth {
        Girth::Finite(k) => Girth::Finite(2 * k),
        other => other,
    };
    girth_bipartite(g).girth == doubled
}

#[test]
fn halving_on_geometries() {
    for g in [
        projective_plane(2).unwrap(),
        projective_plane(3).unwrap(),
        symplectic_quadrangle(2).unwrap(),
        split_cayley_hexagon(2).unwrap(),
    ] {
        assert!(halving_holds(&g));
    }
}

#[test]
fn hexagon_neighborhoods_have_girth_six() {
    let h = neighborhood_hypergraph(&split_cayley_hexagon(2).unwrap()).unwrap();
    let r = girth_hypergraph(&h);
    assert_eq!(r.girth, Girth::Finite(6));
    match r.witness {
        Some(Witness::Berge(c)) => {
            assert_eq!(c.len(), 6);
            assert!(c.is_valid_in(&h));
        }
        w => panic!("expected a Berge witness, got {w:?}"),
    }
}

fn arb_bipartite() -> impl Strategy<Value = BipartiteGraph> {
    (2usize..9, 2usize..9).prop_flat_map(|(l, r)| {
        proptest::collection::btree_set((0..l as VertexId, 0..r as VertexId), 0..=(l * r).min(24))
            .prop_map(move |set| BipartiteGraph::new(l, r, set.into_iter().collect()).unwrap())
    })
}

/// Random linear hypergraph: edges meeting an earlier edge in two or more
/// vertices are skipped, so every cycle has length at least 3.
fn arb_hypergraph(max_vertices: usize) -> impl Strategy<Value = Hypergraph> {
    (3..=max_vertices).prop_flat_map(|n| {
        proptest::collection::vec(
            proptest::collection::btree_set(0..n as VertexId, 2..=n.min(4)),
            1..7,
        )
        .prop_map(move |candidates| {
            let mut edges: Vec<Vec<VertexId>> = Vec::new();
            for c in candidates {
                let e: Vec<VertexId> = c.into_iter().collect();
                if edges.iter().all(|f| f.iter().filter(|v| e.contains(v)).count() < 2) {
                    edges.push(e);
                }
            }
            Hypergraph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn halving_on_random_bipartite(g in arb_bipartite()) {
        prop_assert!(halving_holds(&g));
    }

    #[test]
    fn halving_on_greedy(seed in 0u64..1000, half in 3u32..7) {
        let (g, _) = greedy_high_girth_bipartite(GreedyParams {
            n_left: 30,
            n_right: 12,
            right_degree: 4,
            target_girth: 2 * half,
            seed,
        }).unwrap();
        prop_assert!(girth_bipartite(&g).girth.at_least(2 * half));
        prop_assert!(halving_holds(&g));
    }

    #[test]
    fn substitution_keeps_girth(
        host in arb_hypergraph(9),
        template in arb_hypergraph(4),
    ) {
        let g = girth_hypergraph(&host).girth.finite().unwrap_or(u32::MAX)
            .min(girth_hypergraph(&template).girth.finite().unwrap_or(u32::MAX));
        let need = template.num_vertices();
        let host = Hypergraph::new(
            host.num_vertices(),
            host.edges().iter().filter(|e| e.len() >= need).cloned().collect(),
        ).unwrap();
        prop_assume!(host.num_edges() > 0);
        let out = substitute_edges(&SubstitutionPlan::new(host, template, 1).unwrap()).unwrap();
        let oracle = girth_oracle(&out, 16).unwrap();
        let fast = girth_hypergraph(&out).girth;
        prop_assert!(fast.at_least(g), "fast {fast} < {g}");
        prop_assert!(oracle.girth.at_least(g.min(17)));
    }
}
