mod common;

use std::collections::BTreeSet;

use planar_stc::congestion::{branch_decomposition, dual_tree};
use planar_stc::dual_bounds::{absolute_index, congestion_indicator, index_tables};
use planar_stc::exact::{exact_stc, Budget, Strategy};
use planar_stc::format::{
    parse_cts, parse_plane_graph, parse_tree, write_cts, write_plane_graph, write_tree,
};
use planar_stc::random::{random_cts, random_plane_graph, random_spanning_tree};
use planar_stc::{edge_congestion_cuts, edge_congestion_dual, EdgeId, PlaneGraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn instance(seed: u64, vertices: usize, density: f64) -> (ChaCha8Rng, PlaneGraph) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_plane_graph(&mut rng, vertices, density);
    (rng, g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn euler_formula_holds(seed: u64, v in 2usize..30, density in 0.0f64..=1.0) {
        let (_, g) = instance(seed, v, density);
        prop_assert_eq!(g.vertex_count() + g.face_count(), g.edge_count() + 2);
        prop_assert_eq!(g.faces().iter().filter(|f| f.is_outer).count(), 1);
        for e in g.outer_edges() {
            let (a, b) = g.edge_faces(e);
            prop_assert!((a == g.outer_face()) != (b == g.outer_face()));
        }
    }

    #[test]
    fn cut_and_dual_routes_agree(seed: u64, v in 2usize..25, density in 0.0f64..=1.0) {
        let (mut rng, g) = instance(seed, v, density);
        let t = random_spanning_tree(&mut rng, &g);
        let cuts = edge_congestion_cuts(&g, &t).unwrap();
        prop_assert_eq!(&cuts, &edge_congestion_dual(&g, &t).unwrap());
        prop_assert_eq!(cuts.per_edge, common::cut_oracle(&g, t.edges()));
    }

    #[test]
    fn dual_tree_is_the_complement(seed: u64, v in 2usize..25, density in 0.0f64..=1.0) {
        let (mut rng, g) = instance(seed, v, density);
        let t = random_spanning_tree(&mut rng, &g);
        let d = dual_tree(&g, &t).unwrap();
        let complement: BTreeSet<EdgeId> = g.edges().filter(|&e| !t.contains(e)).collect();
        let dual_edges: BTreeSet<EdgeId> = d.edges().iter().copied().collect();
        prop_assert_eq!(&dual_edges, &complement);
        prop_assert_eq!(dual_edges.len(), g.face_count() - 1);

        // Every interior face enters through exactly one outer edge.
        let branches = branch_decomposition(&g, &t).unwrap();
        prop_assert_eq!(branches.assignment.len(), g.face_count() - 1);
        let total: usize = branches.branches.values().map(Vec::len).sum();
        prop_assert_eq!(total, g.face_count() - 1);
    }

    #[test]
    fn absolute_index_is_dual_distance(seed: u64, v in 3usize..25, density in 0.0f64..=1.0) {
        let (_, g) = instance(seed, v, density);
        prop_assume!(!g.outer_edges().is_empty());
        let table = absolute_index(&g).unwrap();
        let oracle = common::dual_distance_from_outer(&g);
        for f in g.faces() {
            prop_assert_eq!(table.get(f.id), Some(oracle[f.id.0]));
        }
        for (e, t) in index_tables(&g) {
            let (a, b) = g.edge_faces(e);
            let first = if a == g.outer_face() { b } else { a };
            prop_assert_eq!(t.get(first), Some(1));
            prop_assert_eq!(&t.values, &common::index_oracle(&g, e));
        }
    }

    #[test]
    fn files_round_trip(seed: u64, v in 2usize..20, density in 0.0f64..=1.0) {
        let (mut rng, g) = instance(seed, v, density);
        let text = write_plane_graph(&g);
        let back = parse_plane_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        let t = random_spanning_tree(&mut rng, &g);
        prop_assert_eq!(parse_tree(&write_tree(&t), &g).unwrap(), t);
        if let Some(s) = random_cts(&mut rng, &g) {
            let outer = g.outer_face();
            prop_assert_eq!(parse_cts(&write_cts(&s, outer), outer).unwrap(), s);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn indicator_is_a_lower_bound(seed: u64, v in 3usize..=8, density in 0.2f64..=1.0) {
        let (mut rng, g) = instance(seed, v, density);
        let s = random_cts(&mut rng, &g);
        prop_assume!(s.is_some());
        let ci = congestion_indicator(&g, &s.unwrap()).unwrap();
        let exact = common::brute_force_stc(&g);
        if let Some(value) = ci.value {
            prop_assert!(value <= exact);
        }
    }

    #[test]
    fn search_strategies_agree(seed: u64, v in 3usize..=9, density in 0.2f64..=1.0) {
        let (_, g) = instance(seed, v, density);
        let run = |strategy, workers| {
            exact_stc(&g, &Budget { strategy, workers, ..Budget::default() }).unwrap()
        };
        let a = run(Strategy::Enumeration, 1);
        let b = run(Strategy::Decision, 1);
        let c = run(Strategy::Decision, 3);
        prop_assert_eq!(a.value, common::brute_force_stc(&g));
        prop_assert_eq!(a.value, b.value);
        prop_assert_eq!(&a.witness, &b.witness);
        prop_assert_eq!(&b.witness, &c.witness);
        prop_assert_eq!(common::max_congestion(&g, a.witness.edges()), a.value);
    }
}
