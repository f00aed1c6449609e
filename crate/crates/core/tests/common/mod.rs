//! Brute-force oracles shared by the integration suites. Everything here is
//! deliberately independent of the library's algorithms: subset scans and
//! permutation searches only.

#![allow(dead_code)]

use exlf_core::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n_min: usize, n_max: usize) -> Graph {
    let n = rng.random_range(n_min..=n_max);
    let p: f64 = rng.random();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Counts r-cliques by scanning all r-subsets of the vertex set.
pub fn naive_clique_count(g: &Graph, r: usize) -> u64 {
    let n = g.n();
    if r > n {
        return 0;
    }
    let mut subset: Vec<usize> = Vec::with_capacity(r);
    fn rec(g: &Graph, start: usize, left: usize, subset: &mut Vec<usize>) -> u64 {
        if left == 0 {
            for (a, &u) in subset.iter().enumerate() {
                for &v in subset.iter().skip(a + 1) {
                    if !g.has_edge(u, v) {
                        return 0;
                    }
                }
            }
            return 1;
        }
        let mut total = 0;
        for v in start..=g.n() - left {
            subset.push(v);
            total += rec(g, v + 1, left - 1, subset);
            subset.pop();
        }
        total
    }
    rec(g, 0, r, &mut subset)
}

fn is_matching(edges: &[(usize, usize)]) -> bool {
    let mut used = 0u64;
    for &(u, v) in edges {
        if used & (1 << u) != 0 || used & (1 << v) != 0 {
            return false;
        }
        used |= (1 << u) | (1 << v);
    }
    true
}

fn is_linear_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut deg = vec![0u8; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &[usize], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }
    for &(u, v) in edges {
        if deg[u] >= 2 || deg[v] >= 2 {
            return false;
        }
        let (ru, rv) = (find(&parent, u), find(&parent, v));
        if ru == rv {
            return false;
        }
        parent[rv] = ru;
        deg[u] += 1;
        deg[v] += 1;
    }
    true
}

/// True iff some k-subset of `edges` satisfies `pred`. The predicate must be
/// closed under subsets (both of ours are), which lets the scan discard
/// invalid prefixes early while still covering every subset.
fn any_subset_of_size(
    edges: &[(usize, usize)],
    k: usize,
    chosen: &mut Vec<(usize, usize)>,
    pred: &impl Fn(&[(usize, usize)]) -> bool,
) -> bool {
    if k == 0 {
        return true;
    }
    if edges.len() < k {
        return false;
    }
    for idx in 0..=edges.len() - k {
        chosen.push(edges[idx]);
        if pred(chosen) && any_subset_of_size(&edges[idx + 1..], k - 1, chosen, pred) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

/// ν(G) by exhaustive scan over edge subsets, largest size first.
pub fn subset_matching_number(g: &Graph) -> usize {
    let edges = g.edges();
    let cap = (g.n() / 2).min(edges.len());
    for k in (1..=cap).rev() {
        if any_subset_of_size(&edges, k, &mut Vec::new(), &|s| is_matching(s)) {
            return k;
        }
    }
    0
}

/// lf(G) by exhaustive scan over edge subsets, largest size first.
pub fn subset_linear_forest_number(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    let cap = n.saturating_sub(1).min(edges.len());
    for k in (1..=cap).rev() {
        if any_subset_of_size(&edges, k, &mut Vec::new(), &|s| is_linear_forest(n, s)) {
            return k;
        }
    }
    0
}

/// Minimum number of paths covering all vertices (isolated vertices count as
/// paths), by depth-first search over vertex orderings: a cover by paths is
/// an ordering split into adjacent runs, so the minimum is `n` minus the
/// maximum number of adjacent consecutive pairs over all orderings.
pub fn min_path_cover_by_orderings(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut best_links = 0usize;
    fn rec(g: &Graph, used: u64, last: usize, depth: usize, links: usize, best: &mut usize) {
        if links > *best {
            *best = links;
        }
        let n = g.n();
        if depth == n || links + (n - depth) <= *best {
            return;
        }
        for v in 0..n {
            if used & (1 << v) != 0 {
                continue;
            }
            let bonus = usize::from(depth > 0 && g.has_edge(last, v));
            rec(g, used | (1 << v), v, depth + 1, links + bonus, best);
        }
    }
    rec(g, 0, 0, 0, 0, &mut best_links);
    n - best_links
}
