//! Structural invariants: seeded bulk trials for the counted properties and
//! proptest for the shape-level ones.

mod common;

use common::*;
use exlf_core::formulas;
use exlf_core::graph::{join, turan_graph, turan_part_sizes, Graph};
use exlf_core::graph6;
use exlf_core::transforms::{closure, full_shift, greedy_coloring, shift, strong_shift};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

#[test]
fn graph6_round_trip_on_ten_thousand_random_graphs() {
    let mut rng = rng(201);
    for _ in 0..10_000 {
        let g = random_graph(&mut rng, 1, 20);
        let text = graph6::encode(&g);
        assert_eq!(graph6::decode(&text).unwrap(), g, "{text}");
    }
}

#[test]
fn join_edge_count_identity_on_random_pairs() {
    let mut rng = rng(202);
    for _ in 0..1000 {
        let g = random_graph(&mut rng, 1, 12);
        let h = random_graph(&mut rng, 1, 12);
        let j = join(&g, &h);
        assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());
        assert!(j.check_invariants());
    }
}

#[test]
fn turan_graphs_are_balanced_and_match_the_formula() {
    for n in 0..=40 {
        for r in 1..=10 {
            let parts = turan_part_sizes(n, r);
            let (min, max) = (parts.iter().min().unwrap(), parts.iter().max().unwrap());
            assert!(max - min <= 1, "T({n},{r}) parts {parts:?}");
            assert_eq!(parts.iter().sum::<usize>(), n);
            assert_eq!(
                turan_graph(n, r).edge_count() as u64,
                formulas::turan_number(n as u64, r as u64).unwrap()
            );
        }
    }
}

#[test]
fn turan_clique_counts_match_the_graph() {
    for t in 0..=25u64 {
        for k in 1..=6 {
            let g = turan_graph(t as usize, k as usize);
            for r in 1..=6 {
                assert_eq!(
                    formulas::turan_clique_count(t, k, r).unwrap(),
                    exlf_core::freeness::count_cliques(&g, r as usize),
                    "t={t} k={k} r={r}"
                );
            }
        }
    }
}

#[test]
fn formula_is_monotone_in_n_and_s() {
    for s in 1..=10u64 {
        for r in 2..=6 {
            for n in (2 * s + 1)..=40 {
                let here = formulas::ex_clique_linear_forest(n, r, s).unwrap();
                if n > 2 * s + 1 {
                    let prev = formulas::ex_clique_linear_forest(n - 1, r, s).unwrap();
                    assert!(here >= prev);
                }
                if s > 1 && n >= 2 * (s - 1) + 1 {
                    let smaller_s = formulas::ex_clique_linear_forest(n, r, s - 1).unwrap();
                    assert!(here >= smaller_s, "n={n} r={r} s={s}");
                }
            }
        }
    }
}

#[test]
fn closure_is_order_independent() {
    let mut rng = rng(203);
    for _ in 0..1000 {
        let g = random_graph(&mut rng, 2, 10);
        let k = rng.random_range(0..=2 * g.n());
        let reference = closure(&g, k);
        // random addition order: repeatedly add any eligible non-edge
        let mut shuffled = g.clone();
        loop {
            let mut eligible: Vec<(usize, usize)> = (0..shuffled.n())
                .flat_map(|u| ((u + 1)..shuffled.n()).map(move |v| (u, v)))
                .filter(|&(u, v)| {
                    !shuffled.has_edge(u, v) && shuffled.degree(u) + shuffled.degree(v) >= k
                })
                .collect();
            if eligible.is_empty() {
                break;
            }
            eligible.shuffle(&mut rng);
            let (u, v) = eligible[0];
            shuffled.add_edge(u, v);
        }
        assert_eq!(shuffled, reference, "closure order dependence at k={k} on {g:?}");
    }
}

#[test]
fn shift_preserves_edge_count_in_bulk() {
    let mut rng = rng(204);
    for _ in 0..1000 {
        let g = random_graph(&mut rng, 2, 8);
        for i in 0..g.n() {
            for j in (i + 1)..g.n() {
                assert_eq!(shift(&g, i, j).edge_count(), g.edge_count());
            }
        }
        let c = greedy_coloring(&g);
        let i = rng.random_range(0..g.n() - 1);
        let j = rng.random_range(i + 1..g.n());
        assert_eq!(strong_shift(&g, i, j, &c).edge_count(), g.edge_count());
    }
}

#[test]
fn full_shift_reaches_a_per_pair_fixpoint() {
    let mut rng = rng(205);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 2, 8);
        let h = full_shift(&g);
        assert_eq!(h.edge_count(), g.edge_count());
        for i in 0..h.n() {
            for j in (i + 1)..h.n() {
                assert_eq!(shift(&h, i, j), h, "pair ({i},{j}) still moves {h:?}");
            }
        }
    }
}

prop_compose! {
    fn arb_graph(max_n: usize)(n in 1..=max_n)(
        n in Just(n),
        bits in proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
    ) -> Graph {
        let mut g = Graph::empty(n);
        let mut it = bits.into_iter();
        for j in 1..n {
            for i in 0..j {
                if it.next().unwrap() {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

proptest! {
    #[test]
    fn graph6_round_trip_prop(g in arb_graph(16)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn shift_preserves_degrees_sum_prop(g in arb_graph(9), pair in (0usize..8, 0usize..8)) {
        let (a, b) = pair;
        let (i, j) = (a.min(b), a.max(b));
        prop_assume!(i < j && j < g.n());
        let shifted = shift(&g, i, j);
        prop_assert_eq!(shifted.edge_count(), g.edge_count());
        prop_assert!(shifted.check_invariants());
    }

    #[test]
    fn closure_result_is_closed_prop(g in arb_graph(10), k in 0usize..12) {
        let h = closure(&g, k);
        for u in 0..h.n() {
            for v in (u + 1)..h.n() {
                prop_assert!(h.has_edge(u, v) || h.degree(u) + h.degree(v) < k);
            }
        }
    }
}
