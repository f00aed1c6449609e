//! Freeness algorithms against independent brute-force oracles.

mod common;

use common::*;
use exlf_core::freeness::{
    count_cliques, linear_forest_number, max_linear_forest, max_matching, matching_number,
};
use exlf_core::graph::Graph;
use rand::Rng;

#[test]
fn clique_counts_match_naive_enumeration() {
    let mut rng = rng(101);
    for _ in 0..400 {
        let g = random_graph(&mut rng, 2, 8);
        for r in 1..=g.n() {
            assert_eq!(count_cliques(&g, r), naive_clique_count(&g, r), "{g:?} r={r}");
        }
    }
}

#[test]
fn matching_matches_subset_scan_and_witnesses_validate() {
    let mut rng = rng(102);
    for _ in 0..400 {
        let g = random_graph(&mut rng, 2, 8);
        let (nu, witness) = max_matching(&g);
        assert_eq!(nu, subset_matching_number(&g), "{g:?}");
        assert_eq!(witness.edges.len(), nu);
        assert!(witness.is_valid_for(&g));
    }
}

#[test]
fn linear_forest_matches_subset_scan_and_witnesses_validate() {
    let mut rng = rng(103);
    for _ in 0..400 {
        let g = random_graph(&mut rng, 2, 8);
        let (lf, witness) = max_linear_forest(&g);
        assert_eq!(lf, subset_linear_forest_number(&g), "{g:?}");
        assert_eq!(witness.edges.len(), lf);
        assert!(witness.is_valid_for(&g));
    }
}

#[test]
fn lf_equals_order_minus_min_path_cover() {
    let mut rng = rng(104);
    for _ in 0..1000 {
        let g = random_graph(&mut rng, 2, 9);
        let lf = linear_forest_number(&g);
        assert_eq!(lf, g.n() - min_path_cover_by_orderings(&g), "{g:?}");
    }
}

#[test]
fn adding_an_edge_never_decreases_the_invariants() {
    let mut rng = rng(105);
    let mut trials = 0;
    while trials < 500 {
        let g = random_graph(&mut rng, 2, 8);
        let non_edges: Vec<(usize, usize)> = (0..g.n())
            .flat_map(|u| ((u + 1)..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        if non_edges.is_empty() {
            continue;
        }
        let (u, v) = non_edges[rng.random_range(0..non_edges.len())];
        let mut h = g.clone();
        h.add_edge(u, v);
        assert!(matching_number(&h) >= matching_number(&g));
        assert!(linear_forest_number(&h) >= linear_forest_number(&g));
        for r in 2..=5 {
            assert!(count_cliques(&h, r) >= count_cliques(&g, r));
        }
        trials += 1;
    }
}

#[test]
fn known_graphs_pin_the_oracles() {
    // oracle self-checks on hand-computable cases
    let k4 = Graph::complete(4);
    assert_eq!(naive_clique_count(&k4, 3), 4);
    assert_eq!(subset_matching_number(&k4), 2);
    assert_eq!(subset_linear_forest_number(&k4), 3);
    assert_eq!(min_path_cover_by_orderings(&k4), 1);
    let e5 = Graph::empty(5);
    assert_eq!(subset_matching_number(&e5), 0);
    assert_eq!(min_path_cover_by_orderings(&e5), 5);
    assert_eq!(min_path_cover_by_orderings(&Graph::path(6)), 1);
}
