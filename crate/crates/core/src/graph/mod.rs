//! Simple undirected graphs on at most 64 labeled vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so a vertex subset is a
//! single machine word ([`VertexSet`]). Every operation returns a new value; a
//! [`Graph`] is never mutated after it has been handed out except through the
//! explicit `add_edge`/`remove_edge` builders.

mod connectivity;
mod format;
mod sparse;

pub use connectivity::{connectivity, cut_vertices, local_connectivity};
pub use format::{
    from_adjacency_list, from_graph6, parse_adjacency_lists, to_adjacency_list, to_graph6,
    GRAPH6_MAX_ORDER,
};
pub use sparse::SparseGraph;

use std::fmt;

use thiserror::Error;

/// Largest order a bitset [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} is outside 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} is not in a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("cannot identify vertex {0} with itself")]
    SameVertex(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("adjacency list parse error at line {line}: {reason}")]
    AdjacencyList { line: usize, reason: String },
}

/// A subset of `0..64` stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Simple undirected graph on vertices `0..n`, `1 <= n <= 64`.
///
/// Row `v` of the adjacency holds the neighbors of `v`; rows are symmetric,
/// irreflexive, and carry no bits at or above `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: [u64; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph {
            n,
            rows: [0; MAX_ORDER],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from an edge mask in graph6 pair order: bit `j(j-1)/2 + i`
    /// is the pair `(i, j)` with `i < j`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        debug_assert!((1..=11).contains(&n));
        let mut rows = [0u64; MAX_ORDER];
        let mut bits = mask;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (i, j) = EDGE_PAIRS[e];
            rows[i as usize] |= 1u64 << j;
            rows[j as usize] |= 1u64 << i;
        }
        Graph { n, rows }
    }

    /// Inverse of [`Graph::from_edge_mask`]; only defined for `n <= 11`.
    pub fn edge_mask(&self) -> u64 {
        debug_assert!(self.n <= 11);
        let mut mask = 0u64;
        for j in 1..self.n {
            let base = j * (j - 1) / 2;
            let row = self.rows[j] & ((1u64 << j) - 1);
            for i in VertexSet(row) {
                mask |= 1u64 << (base + i);
            }
        }
        mask
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).0;
        for v in 0..n {
            g.rows[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// `P_n` as `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// `C_n` as `0 - 1 - .. - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut g = Graph::path(n)?;
        g.add_edge(0, n - 1)?;
        Ok(g)
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    /// Union of the neighborhoods of every vertex in `set`.
    #[inline]
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for v in set {
            out |= self.rows[v];
        }
        VertexSet(out)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.rows[u] &= !(1u64 << v);
        self.rows[v] &= !(1u64 << u);
        Ok(())
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        Ok(g)
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.rows[u] & !((2u64 << u) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `e(G)`.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.rows[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// `Δ(G)`.
    #[inline]
    pub fn max_degree(&self) -> usize {
        self.rows[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// `δ(G)`.
    #[inline]
    pub fn min_degree(&self) -> usize {
        self.rows[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    /// Vertices reachable from `start` inside `within` (including `start`).
    #[inline]
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let within = within.0;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// True iff the subgraph induced by `within` is connected.
    ///
    /// The empty set is treated as disconnected.
    #[inline]
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => false,
            Some(v) => self.reach(v, within) == within,
        }
    }

    #[inline]
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, left);
            out.push(c);
            left = left.difference(c);
        }
        out
    }

    /// Number of components of `G - removed`.
    pub fn component_count_without(&self, removed: VertexSet) -> usize {
        let mut left = self.vertices().difference(removed);
        let mut count = 0;
        while let Some(v) = left.first() {
            left = left.difference(self.reach(v, left));
            count += 1;
        }
        count
    }

    /// `G ∪ H` on `0..n+m`, with `H` shifted up by `n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut g = Graph::empty(n)?;
        g.rows[..self.n].copy_from_slice(&self.rows[..self.n]);
        for v in 0..other.n {
            g.rows[self.n + v] = other.rows[v] << self.n;
        }
        Ok(g)
    }

    /// `G ∨ H`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).0;
        let right = VertexSet::full(g.n).0 & !left;
        for v in 0..self.n {
            g.rows[v] |= right;
        }
        for v in self.n..g.n {
            g.rows[v] |= left;
        }
        Ok(g)
    }

    /// Merges `u` and `v` into one vertex.
    ///
    /// The merged vertex keeps the smaller label; the larger label is removed
    /// and every vertex above it shifts down by one. Parallel edges collapse and
    /// the `uv` edge, if present, disappears.
    pub fn identify(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        if self.n == 1 {
            return Err(GraphError::OrderOutOfRange(0));
        }
        let (keep, drop) = if u < v { (u, v) } else { (v, u) };
        let mut rows = self.rows;
        let merged = (rows[keep] | rows[drop]) & !(1u64 << keep) & !(1u64 << drop);
        rows[keep] = merged;
        for w in VertexSet(merged) {
            rows[w] |= 1u64 << keep;
        }
        let mut g = Graph::empty(self.n - 1)?;
        for (old, row) in rows[..self.n].iter().enumerate() {
            if old == drop {
                continue;
            }
            let new = if old > drop { old - 1 } else { old };
            g.rows[new] = remove_bit(*row, drop);
        }
        Ok(g)
    }

    /// `G - removed`, relabeled to `0..n-|removed|` preserving relative order.
    pub fn delete_vertices(&self, removed: VertexSet) -> Result<Graph, GraphError> {
        let keep: Vec<usize> = self.vertices().difference(removed).iter().collect();
        self.induced(&keep)
    }

    /// Subgraph induced by `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(vertices.len())?;
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b)?;
                }
            }
        }
        Ok(g)
    }

    /// Checks the representation invariants: symmetric, irreflexive, no stray bits.
    pub fn is_well_formed(&self) -> bool {
        let all = VertexSet::full(self.n).0;
        (0..self.n).all(|v| {
            let row = self.rows[v];
            row & !all == 0
                && row >> v & 1 == 0
                && VertexSet(row).iter().all(|w| self.rows[w] >> v & 1 == 1)
        }) && self.rows[self.n..].iter().all(|&r| r == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Deletes bit `b` from `x`, shifting the higher bits down by one.
#[inline]
fn remove_bit(x: u64, b: usize) -> u64 {
    let low = x & ((1u64 << b) - 1);
    let high = if b >= 63 { 0 } else { (x >> (b + 1)) << b };
    low | high
}

/// Number of vertex pairs of an order-`n` graph.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `(i, j)` for each edge-mask bit, graph6 column order, up to order 11.
const EDGE_PAIRS: [(u8, u8); 55] = {
    let mut out = [(0u8, 0u8); 55];
    let mut e = 0;
    let mut j = 1;
    while j < 11 {
        let mut i = 0;
        while i < j {
            out[e] = (i as u8, j as u8);
            e += 1;
            i += 1;
        }
        j += 1;
    }
    out
};
