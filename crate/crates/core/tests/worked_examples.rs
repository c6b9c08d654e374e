//! Small worked examples, each checked against an independent computation.

use ats_core::gen::{grid_graph, random_tree};
use ats_core::graph::{default_beta, verify_separator, Graph, VertexId};
use ats_core::oracle::{min_balanced_separator, nearest_in_set_oracle, steiner_subtree_oracle};
use ats_core::pipeline::{
    branch_vertices, build_compressed_graph, collapse_weights, compute_spanning_tree,
    decompose_paths, extra_edges, heavy_vertex_fixup, lift_separator, separate_default,
    steiner_subtree, RepairStep,
};
use ats_core::planar::lt_separator;
use ats_core::tree::tree_centroid;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::unit(n, &e).unwrap()
}

fn theta() -> Graph {
    let mut e: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    e.push((0, 4));
    Graph::unit(8, &e).unwrap()
}

fn k4() -> Graph {
    Graph::unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

#[test]
fn c6_opposite_pair_splits_into_two_paths() {
    let r = verify_separator(&cycle(6), &[0, 3], default_beta());
    assert!(r.passed);
    assert_eq!(r.component_weights, vec![2, 2]);
}

#[test]
fn theta_has_two_extra_edges() {
    let g = theta();
    let t = compute_spanning_tree(&g, 0).unwrap();
    assert_eq!(extra_edges(&g, &t).len(), 2);
    assert_eq!(g.excess(), 1);
}

#[test]
fn theta_compresses_with_all_weight_kept() {
    let g = theta();
    let t = compute_spanning_tree(&g, 0).unwrap();
    let r = extra_edges(&g, &t);
    let terminals = r.endpoints();
    let t1 = steiner_subtree(&t, &terminals).unwrap();
    let u = branch_vertices(&t1, &terminals);
    let pi = decompose_paths(&t1, &u);
    let cw = collapse_weights(&g, &t, &t1);
    let cg = build_compressed_graph(&u, &pi, &r, &cw);
    assert_eq!(cg.graph.total_weight(), 8);
    assert!(u.len() <= 8);
    assert_eq!(cg.node_count(), u.len() + pi.len());
    // every separator of the compressed graph lifts into G
    let lifted = lift_separator(&[0, 1], &cg);
    assert!(lifted.iter().all(|&v| v < 8));
}

#[test]
fn random_steiner_subtrees_match_pairwise_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for seed in 0..50 {
        let g = random_tree(10, seed);
        let t = compute_spanning_tree(&g, 0).unwrap();
        let k = rng.gen_range(1..=5);
        let terminals: Vec<VertexId> = (0..k).map(|_| rng.gen_range(0..10)).collect();
        let t1 = steiner_subtree(&t, &terminals).unwrap();
        assert_eq!(t1.members(), steiner_subtree_oracle(&t, &terminals));
    }
}

#[test]
fn binary_tree_branch_set_is_at_most_twice_the_leaves() {
    // complete binary tree on 15 vertices, leaves 7..15 are terminals
    let e: Vec<_> = (1..15).map(|v| ((v - 1) / 2, v)).collect();
    let g = Graph::unit(15, &e).unwrap();
    let t = compute_spanning_tree(&g, 0).unwrap();
    let leaves: Vec<VertexId> = (7..15).collect();
    let t1 = steiner_subtree(&t, &leaves).unwrap();
    let u = branch_vertices(&t1, &leaves);
    assert!(u.len() <= 2 * leaves.len());
    // internal vertices except the root have degree three
    assert_eq!(u.len(), 8 + 6);
}

#[test]
fn collapsed_weights_go_to_the_nearest_subtree_vertex() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for seed in 0..30 {
        let n = 50;
        let w: Vec<u64> = (0..n).map(|_| rng.gen_range(1..10)).collect();
        let g = random_tree(n, seed).with_weights(w).unwrap();
        let t = compute_spanning_tree(&g, 0).unwrap();
        let terminals: Vec<VertexId> = (0..3).map(|_| rng.gen_range(0..n)).collect();
        let t1 = steiner_subtree(&t, &terminals).unwrap();
        let cw = collapse_weights(&g, &t, &t1);
        assert_eq!(cw.wprime.iter().sum::<u64>(), g.total_weight());
        assert_eq!(cw.attach, nearest_in_set_oracle(&t, &t1.members()));
    }
}

#[test]
fn weighted_path_centroid_is_the_heavy_end() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)], vec![5, 1, 1]).unwrap();
    assert_eq!(tree_centroid(&g, &[0, 1, 2]), Ok(0));
}

#[test]
fn star_with_chord_needs_a_centroid_repair() {
    let mut e: Vec<_> = (1..100).map(|i| (0, i)).collect();
    e.push((1, 2));
    let g = Graph::unit(100, &e).unwrap();
    // the chord endpoints leave a 97-leaf star hanging at the hub
    assert!(!verify_separator(&g, &[1, 2], default_beta()).passed);
    let s = heavy_vertex_fixup(&g, &[1, 2], default_beta(), None).unwrap();
    assert_eq!(s.stats.repair_log, vec![RepairStep::Centroid(0)]);
    assert!(verify_separator(&g, &s.vertices, default_beta()).passed);
}

#[test]
fn pipeline_on_small_cycles_and_theta() {
    for g in [cycle(6), theta(), k4(), grid_graph(3, 3)] {
        let s = separate_default(&g).unwrap();
        assert!(verify_separator(&g, &s.vertices, default_beta()).passed);
        let bound = 4.0 * ((g.excess() + 1) as f64).sqrt() + 2.0;
        assert!(s.vertices.len() as f64 <= bound);
        let o = min_balanced_separator(&g, default_beta(), g.n()).unwrap();
        assert!(s.vertices.len() >= o.min_size.unwrap());
    }
}

#[test]
fn oracle_minimums() {
    let c6 = min_balanced_separator(&cycle(6), default_beta(), 6).unwrap();
    assert_eq!((c6.min_size, c6.witness), (Some(2), vec![0, 3]));
    assert_eq!(
        min_balanced_separator(&k4(), default_beta(), 4)
            .unwrap()
            .min_size,
        Some(2)
    );
    // {1, 3} isolates corner 0 and leaves six vertices, exactly 2/3 of nine
    let grid = min_balanced_separator(&grid_graph(3, 3), default_beta(), 9).unwrap();
    assert_eq!((grid.min_size, grid.witness.clone()), (Some(2), vec![1, 3]));
    assert!(verify_separator(&grid_graph(3, 3), &grid.witness, default_beta()).passed);
}

#[test]
fn lt_on_small_planar_graphs() {
    for g in [cycle(6), k4(), grid_graph(3, 3)] {
        let s = lt_separator(&g).unwrap();
        assert!(verify_separator(&g, &s.vertices, default_beta()).passed);
        assert!(s.vertices.len() as f64 <= 4.0 * (g.n() as f64).sqrt());
    }
}
