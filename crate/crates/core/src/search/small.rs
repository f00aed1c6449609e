//! Compact graphs for the exhaustive-search core and their canonical form.
//!
//! Enumeration never exceeds [`ENUM_MAX`] vertices, so a graph fits in one
//! `u16` adjacency row per vertex and its upper-triangle bit pattern fits in
//! a `u64` key. The canonical form of a class is the smallest leaf key
//! reached by partition refinement with individualization; two graphs are
//! isomorphic iff their canonical keys agree (cross-validated exhaustively
//! against permutation canonicalization for all graphs on up to 6 vertices).

use crate::graph::Graph;

/// Hard cap for exhaustive enumeration.
pub const ENUM_MAX: usize = 10;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct SmallGraph {
    pub n: u8,
    pub adj: [u16; ENUM_MAX],
}

/// Bit position of the pair `(i, j)`, `i < j`, in a triangle key: column by
/// column, the same order graph6 uses.
#[inline]
fn pair_bit(i: usize, j: usize) -> u32 {
    debug_assert!(i < j);
    (j * (j - 1) / 2 + i) as u32
}

impl SmallGraph {
    pub fn single_vertex() -> Self {
        SmallGraph { n: 1, adj: [0; ENUM_MAX] }
    }

    pub fn from_graph(g: &Graph) -> Self {
        assert!(g.n() <= ENUM_MAX, "graph too large for the search core");
        let mut adj = [0u16; ENUM_MAX];
        for (row, item) in adj.iter_mut().enumerate().take(g.n()) {
            *item = g.neighbors(row) as u16;
        }
        SmallGraph { n: g.n() as u8, adj }
    }

    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let mut g = Graph::empty(n);
        for u in 0..n {
            let mut higher = self.adj[u] >> (u + 1);
            while higher != 0 {
                let v = u + 1 + higher.trailing_zeros() as usize;
                higher &= higher - 1;
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Labeled (non-canonical) triangle key.
    #[cfg(test)]
    pub fn labeled_key(&self) -> u64 {
        let n = self.n as usize;
        let mut key = 0u64;
        for j in 1..n {
            for i in 0..j {
                if self.adj[j] & (1 << i) != 0 {
                    key |= 1u64 << pair_bit(i, j);
                }
            }
        }
        key
    }

    pub fn from_key(n: usize, key: u64) -> Self {
        debug_assert!(n >= 1 && n <= ENUM_MAX);
        let mut adj = [0u16; ENUM_MAX];
        for j in 1..n {
            for i in 0..j {
                if key & (1u64 << pair_bit(i, j)) != 0 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        SmallGraph { n: n as u8, adj }
    }

    /// The key after relabeling vertex `v` to `perm[v]`.
    pub fn relabeled_key(&self, perm: &[u8]) -> u64 {
        let n = self.n as usize;
        let mut key = 0u64;
        for j in 1..n {
            let row = self.adj[j];
            for i in 0..j {
                if row & (1 << i) != 0 {
                    let a = perm[i].min(perm[j]) as usize;
                    let b = perm[i].max(perm[j]) as usize;
                    key |= 1u64 << pair_bit(a, b);
                }
            }
        }
        key
    }

    /// New graph with one extra vertex adjacent to exactly `neighborhood`.
    pub fn with_added_vertex(&self, neighborhood: u16) -> Self {
        let n = self.n as usize;
        debug_assert!(n < ENUM_MAX);
        debug_assert_eq!(neighborhood & !((1 << n) - 1), 0);
        let mut out = *self;
        out.n += 1;
        out.adj[n] = neighborhood;
        let mut rest = neighborhood;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out.adj[v] |= 1 << n;
        }
        out
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }
}

/// Splits `cells[d]` by neighbor counts into `cells[s]`; subcells are
/// ordered by ascending count. Returns true iff the cell actually split.
fn try_split(g: &SmallGraph, cells: &mut Vec<u16>, s: usize, d: usize) -> bool {
    let cell = cells[d];
    if cell.count_ones() <= 1 {
        return false;
    }
    let splitter = cells[s];
    let mut buckets = [0u16; ENUM_MAX + 1];
    let mut rest = cell;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let cnt = (g.adj[v] & splitter).count_ones() as usize;
        buckets[cnt] |= 1 << v;
    }
    let sub: Vec<u16> = buckets.iter().copied().filter(|&b| b != 0).collect();
    if sub.len() <= 1 {
        return false;
    }
    cells.splice(d..=d, sub);
    true
}

/// Equitable refinement: restart the scan after every successful split so
/// the outcome depends only on the partition structure, never on labels.
fn refine(g: &SmallGraph, cells: &mut Vec<u16>) {
    'restart: loop {
        for s in 0..cells.len() {
            for d in 0..cells.len() {
                if try_split(g, cells, s, d) {
                    continue 'restart;
                }
            }
        }
        return;
    }
}

/// Interchangeable vertices: identical adjacency outside `{u, v}` means the
/// transposition `(u v)` is an automorphism, so only one needs branching.
#[inline]
fn twins(g: &SmallGraph, u: usize, v: usize) -> bool {
    let m = !((1u16 << u) | (1u16 << v));
    g.adj[u] & m == g.adj[v] & m
}

fn leaf_key(g: &SmallGraph, cells: &[u16]) -> u64 {
    let mut perm = [0u8; ENUM_MAX];
    for (pos, &c) in cells.iter().enumerate() {
        debug_assert_eq!(c.count_ones(), 1);
        perm[c.trailing_zeros() as usize] = pos as u8;
    }
    g.relabeled_key(&perm)
}

fn canon_rec(g: &SmallGraph, cells: &[u16], best: &mut u64) {
    match cells.iter().position(|c| c.count_ones() > 1) {
        None => {
            let key = leaf_key(g, cells);
            if key < *best {
                *best = key;
            }
        }
        Some(t) => {
            let cell = cells[t];
            let mut tried: Vec<usize> = Vec::new();
            let mut rest = cell;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if tried.iter().any(|&u| twins(g, u, v)) {
                    continue;
                }
                tried.push(v);
                let mut next = cells.to_vec();
                next[t] = cell & !(1u16 << v);
                next.insert(t, 1u16 << v);
                refine(g, &mut next);
                canon_rec(g, &next, best);
            }
        }
    }
}

/// Canonical key of the isomorphism class of `g`.
pub(crate) fn canonical_key(g: &SmallGraph) -> u64 {
    let n = g.n as usize;
    if n <= 1 {
        return 0;
    }
    // initial partition by ascending degree
    let mut by_degree = [0u16; ENUM_MAX + 1];
    for v in 0..n {
        by_degree[g.degree(v) as usize] |= 1 << v;
    }
    let mut cells: Vec<u16> = by_degree.iter().copied().filter(|&c| c != 0).collect();
    refine(g, &mut cells);
    let mut best = u64::MAX;
    canon_rec(g, &cells, &mut best);
    debug_assert_ne!(best, u64::MAX);
    best
}
