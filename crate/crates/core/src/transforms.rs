//! Graph rewriting operations: the shifting operation, its color-restricted
//! strong variant, full shift sweeps to a fixpoint, and degree-sum closures.

use crate::graph::{Coloring, Graph};

/// Single shifting step `S_ij` for `i < j`: every edge `{j, k}` with
/// `k != i` is replaced by `{i, k}` unless that edge already exists. All
/// replacement decisions are taken against the input edge set, then applied
/// at once; the edge count is always preserved.
pub fn shift(g: &Graph, i: usize, j: usize) -> Graph {
    shift_impl(g, i, j, None)
}

/// Strong shifting `S'_ij`: like [`shift`] but an edge `{j, k}` only moves
/// to `{i, k}` when `k` and `i` lie in different color classes.
pub fn strong_shift(g: &Graph, i: usize, j: usize, c: &Coloring) -> Graph {
    assert!(c.is_total_for(g), "coloring must assign a color to every vertex");
    shift_impl(g, i, j, Some(c))
}

fn shift_impl(g: &Graph, i: usize, j: usize, c: Option<&Coloring>) -> Graph {
    assert!(i < j, "shift requires i < j (got i={i}, j={j})");
    assert!(j < g.n(), "vertex {j} out of range for n={}", g.n());
    let mut out = g.clone();
    let mut moved = g.neighbors(j) & !(1u64 << i);
    while moved != 0 {
        let k = moved.trailing_zeros() as usize;
        moved &= moved - 1;
        if g.has_edge(i, k) {
            continue;
        }
        if let Some(c) = c {
            if c.color(k) == c.color(i) {
                continue;
            }
        }
        // two moved edges {j,k}, {j,k'} have distinct targets, so no merge
        assert!(!out.has_edge(i, k), "shift produced a duplicate target ({i},{k})");
        out.remove_edge(j, k);
        out.add_edge(i, k);
    }
    assert_eq!(out.edge_count(), g.edge_count(), "shift must preserve the edge count");
    out
}

/// All vertex pairs `i < j` in the fixed sweep order: ascending `j`, then
/// ascending `i`.
fn sweep_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

fn full_shift_sweeps(g: &Graph, c: Option<&Coloring>, pairs: &[(usize, usize)]) -> Graph {
    let mut current = g.clone();
    loop {
        let before = current.clone();
        for &(i, j) in pairs {
            current = shift_impl(&current, i, j, c);
        }
        if current == before {
            return current;
        }
    }
}

/// Applies [`shift`] for every pair `i < j` in the fixed sweep order until a
/// full sweep changes nothing. Terminates because each move strictly lowers
/// the sum of edge endpoint labels; the result is a fixpoint of every single
/// pair operation.
pub fn full_shift(g: &Graph) -> Graph {
    full_shift_sweeps(g, None, &sweep_pairs(g.n()))
}

/// [`full_shift`] with the strong (color-restricted) step.
pub fn full_shift_strong(g: &Graph, c: &Coloring) -> Graph {
    assert!(c.is_total_for(g), "coloring must assign a color to every vertex");
    full_shift_sweeps(g, Some(c), &sweep_pairs(g.n()))
}

/// [`full_shift`] over a caller-supplied pair order; `pairs` must list every
/// pair `i < j` exactly once. Used to probe order sensitivity of the sweep.
pub fn full_shift_with_order(g: &Graph, pairs: &[(usize, usize)]) -> Graph {
    let n = g.n();
    let mut seen = vec![false; n * n];
    for &(i, j) in pairs {
        assert!(i < j && j < n, "invalid pair ({i},{j})");
        assert!(!seen[i * n + j], "duplicate pair ({i},{j})");
        seen[i * n + j] = true;
    }
    assert_eq!(pairs.len(), n * n.saturating_sub(1) / 2, "pair order must cover all pairs");
    full_shift_sweeps(g, None, pairs)
}

/// k-closure: repeatedly joins non-adjacent vertices whose degree sum is at
/// least `k`, until every non-edge has degree sum below `k`. The result does
/// not depend on the addition order (tested, not assumed).
pub fn closure(g: &Graph, k: usize) -> Graph {
    let mut out = g.clone();
    let n = out.n();
    let mut changed = true;
    while changed {
        changed = false;
        for u in 0..n {
            for v in (u + 1)..n {
                if !out.has_edge(u, v) && out.degree(u) + out.degree(v) >= k {
                    out.add_edge(u, v);
                    changed = true;
                }
            }
        }
    }
    out
}

/// Color-restricted closure: joins non-adjacent, differently colored
/// vertices with degree sum at least `s` until none remain.
pub fn strong_closure(g: &Graph, s: usize, c: &Coloring) -> Graph {
    assert!(c.is_total_for(g), "coloring must assign a color to every vertex");
    let mut out = g.clone();
    let n = out.n();
    let mut changed = true;
    while changed {
        changed = false;
        for u in 0..n {
            for v in (u + 1)..n {
                if !out.has_edge(u, v)
                    && c.color(u) != c.color(v)
                    && out.degree(u) + out.degree(v) >= s
                {
                    out.add_edge(u, v);
                    changed = true;
                }
            }
        }
    }
    out
}

/// Greedy proper coloring by descending degree (ties by index): each vertex
/// receives the smallest color absent from its already-colored neighbors.
/// This is the coloring the verification pipeline feeds to the strong
/// operations when none is supplied.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![u32::MAX; n];
    for &v in &order {
        let mut used = 0u64;
        let mut nbrs = g.neighbors(v);
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if colors[w] != u32::MAX && colors[w] < 64 {
                used |= 1 << colors[w];
            }
        }
        colors[v] = (!used).trailing_zeros();
    }
    Coloring::new(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_multipartite;

    #[test]
    fn shift_moves_edge_toward_low_index() {
        let g = Graph::from_edges(3, &[(1, 2)]);
        let h = shift(&g, 0, 1);
        assert_eq!(h.edges(), vec![(0, 2)]);
    }

    #[test]
    fn shift_blocked_by_existing_target() {
        let g = Graph::from_edges(3, &[(0, 2), (1, 2)]);
        let h = shift(&g, 0, 1);
        assert_eq!(h, g);
    }

    #[test]
    #[should_panic]
    fn shift_rejects_bad_pair() {
        let g = Graph::empty(3);
        let _ = shift(&g, 2, 1);
    }

    #[test]
    fn strong_shift_respects_colors() {
        let g = Graph::from_edges(3, &[(1, 2)]);
        // monochromatic coloring blocks every move
        let h = strong_shift(&g, 0, 1, &Coloring::uniform(3));
        assert_eq!(h, g);
        // k=2 and i=0 differently colored: the move happens
        let c = Coloring::new(vec![0, 0, 1]);
        let h = strong_shift(&g, 0, 1, &c);
        assert_eq!(h.edges(), vec![(0, 2)]);
    }

    #[test]
    fn full_shift_concentrates_path() {
        // path 2-3-4 on five vertices drains to a star at vertex 0
        let g = Graph::from_edges(5, &[(2, 3), (3, 4)]);
        let h = full_shift(&g);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn full_shift_fixpoint_is_stable() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]);
        let h = full_shift(&g);
        assert_eq!(full_shift(&h), h);
        for (i, j) in sweep_pairs(h.n()) {
            assert_eq!(shift(&h, i, j), h);
        }
    }

    #[test]
    fn closure_examples() {
        assert_eq!(closure(&Graph::path(3), 2), Graph::complete(3));
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]);
        assert_eq!(closure(&g, 12), g); // threshold unreachable
        assert_eq!(closure(&Graph::empty(3), 0), Graph::complete(3));
    }

    #[test]
    fn strong_closure_examples() {
        // P_3 with both ends in one class: the only candidate pair is blocked
        let p3 = Graph::path(3);
        let ends_same = Coloring::new(vec![0, 1, 0]);
        assert_eq!(strong_closure(&p3, 2, &ends_same), p3);
        // all-distinct colors and s=0 degenerate to the plain closure
        let distinct = Coloring::new(vec![0, 1, 2]);
        assert_eq!(strong_closure(&Graph::empty(3), 0, &distinct), Graph::complete(3));
        // star whose leaves share a color and never reach the degree sum
        let (star, c) = complete_multipartite(&[1, 3]);
        assert_eq!(strong_closure(&star, 4, &c), star);
    }

    #[test]
    fn greedy_coloring_is_proper() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::path(6), Graph::empty(3)] {
            let c = greedy_coloring(&g);
            assert!(c.is_proper(&g));
        }
        let (g, _) = complete_multipartite(&[3, 3, 2]);
        let c = greedy_coloring(&g);
        assert!(c.is_proper(&g));
        assert_eq!(c.num_colors(), 3);
    }
}
