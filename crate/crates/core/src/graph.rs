//! Simple undirected graphs on labeled vertices with bitset adjacency,
//! plus the constructors for the graph families used throughout the crate.

use std::fmt;

/// Hard capacity of the adjacency representation: one `u64` word per vertex.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one neighbor bitset per vertex. The structure is
/// kept symmetric and irreflexive at all times; mutation goes through
/// [`Graph::add_edge`] / [`Graph::remove_edge`] which enforce both.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges (the family `E_n`).
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds cap {MAX_VERTICES}");
        Graph { n, adj: vec![0; n] }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Path `P_n` on vertices `0..n` with edges `{i, i+1}`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(0, n - 1);
        g
    }

    /// Builds a graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & (1u64 << v) != 0
    }

    /// Adds the edge `{u, v}`; no-op if already present.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range for n={}", self.n);
        assert!(u != v, "self-loop at {u}");
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    /// Removes the edge `{u, v}`; no-op if absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v);
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count_ones() as usize
    }

    /// Number of edges; always half the number of adjacent ordered pairs.
    pub fn edge_count(&self) -> usize {
        let total: u32 = self.adj.iter().map(|row| row.count_ones()).sum();
        debug_assert!(total % 2 == 0);
        (total / 2) as usize
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !(self.low_mask(u + 1));
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    #[inline]
    fn low_mask(&self, k: usize) -> u64 {
        if k >= 64 {
            u64::MAX
        } else {
            (1u64 << k) - 1
        }
    }

    /// True iff `v` has no incident edge.
    #[inline]
    pub fn is_isolated(&self, v: usize) -> bool {
        self.neighbors(v) == 0
    }

    /// Same edge set on a larger vertex set: appends `n - self.n()` isolated
    /// vertices. Requires `n >= self.n()`.
    pub fn padded(&self, n: usize) -> Graph {
        assert!(n >= self.n, "cannot pad {} vertices down to {n}", self.n);
        assert!(n <= MAX_VERTICES);
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        Graph { n, adj }
    }

    /// Induced subgraph on the vertices of `mask`, relabeled to `0..k`
    /// preserving the original order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = (0..self.n).filter(|&v| mask & (1 << v) != 0).collect();
        let mut g = Graph::empty(verts.len());
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Checks the structural invariants (symmetry, no loops, no stray bits).
    /// Intended for tests and debug assertions.
    pub fn check_invariants(&self) -> bool {
        let mask = self.vertex_mask();
        for u in 0..self.n {
            if self.adj[u] & !mask != 0 || self.adj[u] & (1 << u) != 0 {
                return false;
            }
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) != self.has_edge(v, u) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Assignment of every vertex to a color class.
///
/// Colorings drive the strong-shifting and strong-closure operations. A
/// coloring is not required to be proper; [`Coloring::is_proper`] tests it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Self {
        Coloring { colors }
    }

    /// All vertices in a single class.
    pub fn uniform(n: usize) -> Self {
        Coloring { colors: vec![0; n] }
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// True iff the coloring assigns a color to every vertex of `g`.
    pub fn is_total_for(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
    }

    /// True iff no edge of `g` joins two same-colored vertices.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.is_total_for(g)
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn num_colors(&self) -> usize {
        self.colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }
}

/// Complete multipartite graph with the given part sizes, vertices numbered
/// part by part. Also returns the induced proper coloring (color = part id).
pub fn complete_multipartite(part_sizes: &[usize]) -> (Graph, Coloring) {
    let n: usize = part_sizes.iter().sum();
    let mut g = Graph::empty(n);
    let mut colors = Vec::with_capacity(n);
    for (part, &size) in part_sizes.iter().enumerate() {
        colors.extend(std::iter::repeat(part as u32).take(size));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if colors[u] != colors[v] {
                g.add_edge(u, v);
            }
        }
    }
    (g, Coloring::new(colors))
}

/// Part sizes of the Turán graph `T(n, r)`: `n mod r` parts of size
/// `ceil(n/r)` followed by the rest of size `floor(n/r)`.
pub fn turan_part_sizes(n: usize, r: usize) -> Vec<usize> {
    assert!(r >= 1, "Turán graph needs at least one part");
    let q = n / r;
    let rem = n % r;
    let mut parts = vec![q + 1; rem];
    parts.extend(std::iter::repeat(q).take(r - rem));
    parts
}

/// Turán graph `T(n, r)`: the balanced complete `r`-partite graph on `n`
/// vertices. Larger parts get the lowest color ids; for `n < r` this is `K_n`.
pub fn turan_graph(n: usize, r: usize) -> Graph {
    complete_multipartite(&turan_part_sizes(n, r)).0
}

/// Join `g ∨ h`: disjoint union plus all edges between the two vertex sets.
/// The vertices of `h` are relabeled to follow those of `g`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.n() + h.n();
    let mut out = Graph::empty(n);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(g.n() + u, g.n() + v);
    }
    for u in 0..g.n() {
        for v in 0..h.n() {
            out.add_edge(u, g.n() + v);
        }
    }
    out
}

/// Failure modes of [`extremal_construction`].
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("parameters out of range: need n >= 2s+1, r >= 2, s >= 1 (got n={n}, r={r}, s={s})")]
    InvalidParameters { n: usize, r: usize, s: usize },
    #[error("candidate graph {index} failed the freeness certificate")]
    CertificationFailed { index: usize },
}

/// The two extremal candidates for hosts on `n` vertices that must avoid
/// `K_{r+1}` and every order-`n` linear forest with `s` edges:
///
/// 1. `T(s, r)` padded with `n - s` isolated vertices, and
/// 2. `T(m, r-1) ∨ E_{n-m}` with `m = floor((s-1)/2)`.
///
/// Both graphs are certified `K_{r+1}`-free and linear-forest-free before
/// being returned; the larger of their edge counts attains
/// [`crate::formulas::ex_clique_linear_forest`].
pub fn extremal_construction(n: usize, r: usize, s: usize) -> Result<Vec<Graph>, ConstructionError> {
    if s < 1 || r < 2 || n < 2 * s + 1 || n > MAX_VERTICES {
        return Err(ConstructionError::InvalidParameters { n, r, s });
    }
    let first = turan_graph(s, r).padded(n);
    let m = (s - 1) / 2;
    let second = join(&turan_graph(m, r - 1), &Graph::empty(n - m));
    let candidates = vec![first, second];
    for (index, g) in candidates.iter().enumerate() {
        let clique_ok = crate::freeness::is_clique_free(g, r + 1);
        let forest_ok = crate::freeness::is_linear_forest_free(g, s);
        if !clique_ok || !forest_ok {
            return Err(ConstructionError::CertificationFailed { index });
        }
    }
    Ok(candidates)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_orders() {
        for k in [0usize, 3, 7] {
            let g = Graph::empty(k);
            assert_eq!(g.n(), k);
            assert_eq!(g.edge_count(), 0);
            assert!(g.check_invariants());
        }
    }

    #[test]
    fn complete_multipartite_edge_counts() {
        let (k3, c) = complete_multipartite(&[1, 1, 1]);
        assert_eq!(k3.edge_count(), 3);
        assert!(c.is_proper(&k3));

        let (k32, c) = complete_multipartite(&[3, 2]);
        assert_eq!(k32.edge_count(), 6);
        assert!(c.is_proper(&k32));

        let (t53, c) = complete_multipartite(&[2, 2, 1]);
        assert_eq!(t53.edge_count(), 8);
        assert!(c.is_proper(&t53));
    }

    #[test]
    fn turan_graph_examples() {
        assert_eq!(turan_graph(5, 2).edge_count(), 6);
        // n < r degenerates to the complete graph
        let g = turan_graph(2, 3);
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(turan_graph(10, 3).edge_count(), 33);
        assert_eq!(turan_part_sizes(10, 3), vec![4, 3, 3]);
    }

    #[test]
    #[should_panic]
    fn turan_graph_rejects_zero_parts() {
        let _ = turan_graph(5, 0);
    }

    #[test]
    fn join_examples() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]);
        let joined = join(&Graph::empty(0), &g);
        assert_eq!(joined.edges(), g.edges());

        let star = join(&Graph::complete(1), &Graph::empty(6));
        assert_eq!(star.edge_count(), 6);

        let big = join(&turan_graph(2, 2), &Graph::empty(9));
        assert_eq!(big.edge_count(), 1 + 0 + 2 * 9);
    }

    #[test]
    fn extremal_construction_examples() {
        let gs = extremal_construction(9, 2, 4).unwrap();
        assert_eq!(gs[0].n(), 9);
        assert_eq!(gs[0].edge_count(), 4);
        assert_eq!(gs[1].edge_count(), 8); // K_{1,8}

        let gs = extremal_construction(11, 3, 5).unwrap();
        assert_eq!(gs[1].edge_count(), 19); // T(2,2) ∨ E_9

        // floor((s-1)/2) = 0 degenerates the second candidate to E_n
        let gs = extremal_construction(5, 2, 2).unwrap();
        assert_eq!(gs[0].edge_count(), 1);
        assert_eq!(gs[1].edge_count(), 0);
    }

    #[test]
    fn extremal_construction_rejects_bad_params() {
        assert!(matches!(
            extremal_construction(8, 2, 4),
            Err(ConstructionError::InvalidParameters { .. })
        ));
        assert!(matches!(
            extremal_construction(9, 1, 4),
            Err(ConstructionError::InvalidParameters { .. })
        ));
        assert!(matches!(
            extremal_construction(9, 2, 0),
            Err(ConstructionError::InvalidParameters { .. })
        ));
    }

    #[test]
    #[should_panic]
    fn add_edge_rejects_self_loop() {
        let mut g = Graph::empty(3);
        g.add_edge(1, 1);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::from_edges(5, &[(0, 2), (2, 4), (1, 3)]);
        let h = g.induced(0b10101); // vertices 0,2,4
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }
}
