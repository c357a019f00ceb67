mod common;

use common::brute_force_edds;
use edds_core::transforms::{line_graph, middle, mycielskian, subdivide_matching, subdivision, VertexTag};
use edds_core::{
    omega_witness, parse_graph6, replay_reverse_construction, subdivision_edds, to_graph6, Graph,
    Solver, VertexSet,
};
use proptest::prelude::*;

fn graph_upto(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// `(H, M)` with `M = {(2i, 2i+1)}` perfect, plus random extra edges, then
/// relabeled by a random permutation.
fn graph_with_perfect_matching(max_pairs: usize) -> impl Strategy<Value = (Graph, Vec<(usize, usize)>)> {
    (1..=max_pairs).prop_flat_map(|k| {
        let n = 2 * k;
        (
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(bits, perm)| {
                let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                let m: Vec<(usize, usize)> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
                let edges = pairs
                    .zip(bits)
                    .filter(|(e, b)| *b || m.contains(e))
                    .map(|((a, b), _)| (perm[a], perm[b]));
                let h = Graph::new(n, edges).unwrap();
                let m = m.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
                (h, m)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in graph_upto(20)) {
        let c = g.complement();
        prop_assert!(c.is_well_formed());
        prop_assert_eq!(c.size() + g.size(), g.order() * g.order().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn graph6_round_trips(g in graph_upto(62)) {
        let line = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn construction_laws(g in graph_upto(9)) {
        let (n, m) = (g.order(), g.size());

        let s = subdivision(&g).unwrap();
        prop_assert_eq!(s.graph.order(), n + m);
        prop_assert!(s.graph.is_well_formed() && s.is_consistent());
        prop_assert!(s.graph.is_independent(s.originals()));
        prop_assert!(s.graph.complement().is_clique(s.originals()));
        prop_assert!(s.edge_vertices().iter().all(|z| s.graph.degree(z) == 2));

        let mu = mycielskian(&g).unwrap();
        prop_assert_eq!(mu.graph.order(), 2 * n + 1);
        prop_assert_eq!(mu.graph.size(), 3 * m + n);
        prop_assert!(mu.graph.is_well_formed() && mu.is_consistent());

        let mid = middle(&g).unwrap();
        let lg = line_graph(&g).unwrap();
        prop_assert_eq!(mid.graph.order(), n + m);
        prop_assert_eq!(mid.graph.size(), 2 * m + lg.graph.size());
        prop_assert!(mid.graph.is_independent(mid.originals()));
        prop_assert!(mid.graph.complement().is_clique(mid.originals()));
        prop_assert!(mid.graph.is_well_formed() && mid.is_consistent());
    }

    #[test]
    fn subdivision_is_repeated_single_edge_subdivision(g in graph_upto(8)) {
        let n = g.order();
        let mut current = g.clone();
        let mut tags: Vec<VertexTag> = (0..n).map(VertexTag::Original).collect();
        for (i, j) in g.edges() {
            let step = subdivide_matching(&current, &[(i, j)]).unwrap();
            tags.push(*step.tags.last().unwrap());
            current = step.graph;
        }
        let s = subdivision(&g).unwrap();
        prop_assert_eq!(current, s.graph);
        prop_assert_eq!(tags, s.tags);
    }

    #[test]
    fn matching_subdivision_order_is_multiple_of_three((h, m) in graph_with_perfect_matching(6)) {
        let g = subdivide_matching(&h, &m).unwrap();
        prop_assert_eq!(g.graph.order(), 3 * m.len());
    }

    #[test]
    fn solver_results_are_sound_matchings_of_one_size(g in graph_upto(14)) {
        let all = Solver::default().enumerate(&g).unwrap();
        for &d in &all {
            prop_assert!(edds_core::verify_edds(&g, d).unwrap().is_empty());
            prop_assert!(g.is_one_regular_on(d).unwrap());
            prop_assert_eq!(d.len() % 2, 0);
            prop_assert_eq!(d.len(), all[0].len());
        }
        let again = Solver::default().enumerate(&g).unwrap();
        prop_assert_eq!(&all, &again);
        prop_assert_eq!(Solver::default().find(&g).unwrap().is_some(), !all.is_empty());
    }

    #[test]
    fn solver_is_complete(g in graph_upto(10)) {
        prop_assert_eq!(Solver::default().enumerate(&g).unwrap(), brute_force_edds(&g));
    }

    #[test]
    fn omega_witness_structure(g in graph_upto(12)) {
        if let Some(w) = omega_witness(&g) {
            prop_assert!(w.is_valid_for(&g));
            prop_assert_eq!(3 * w.omega.len(), g.order());
            prop_assert!(g.is_independent(w.omega));
            prop_assert!(w.omega.iter().all(|v| g.degree(v) == 2));
        }
        let d = subdivision_edds(&g).unwrap();
        if d.exists {
            prop_assert_eq!(g.order() % 3, 0);
        }
    }

    /// Forward direction: every `S_M(H)` with `M` perfect admits an EDDS of
    /// its subdivision, and undoing it recovers the graph.
    #[test]
    fn matching_subdivisions_have_subdivision_edds((h, m) in graph_with_perfect_matching(4)) {
        let g = subdivide_matching(&h, &m).unwrap().graph;
        let d = subdivision_edds(&g).unwrap();
        prop_assert!(d.exists);
        let w = d.witness.unwrap();
        prop_assert_eq!(3 * w.len(), 4 * g.order());
        let s = subdivision(&g).unwrap();
        prop_assert!(edds_core::verify_edds(&s.graph, w).unwrap().is_empty());
        prop_assert!(Solver::with_max_n(64).find(&s.graph).unwrap().is_some());

        let r = replay_reverse_construction(&g, w).unwrap();
        prop_assert!(r.triangle_exceptions.is_empty());
        prop_assert!(r.round_trip);
        prop_assert_eq!(r.h.size(), h.size());
        prop_assert_eq!(r.matching.len(), m.len());
    }
}

#[test]
fn subdivision_decider_on_all_six_vertex_graphs() {
    let mut positive = 0;
    for g in edds_core::enumerate_graphs(6).unwrap() {
        let s = subdivision(&g).unwrap();
        let d = subdivision_edds(&g).unwrap();
        let oracle = Solver::default().enumerate(&s.graph).unwrap();
        assert_eq!(d.exists, !oracle.is_empty(), "{g:?}");
        if let Some(w) = d.witness {
            positive += 1;
            assert!(oracle.contains(&w));
            assert_eq!(w.len(), 8);
            let r = replay_reverse_construction(&g, w).unwrap();
            assert_eq!(r.round_trip, r.triangle_exceptions.is_empty(), "{g:?}");
            let originals = VertexSet::full(6);
            assert!(oracle.iter().all(|d| d.intersection(originals).len() < 5));
        }
    }
    assert!(positive > 0);
}
