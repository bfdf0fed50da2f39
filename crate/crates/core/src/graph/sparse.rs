//! Adjacency-list graphs for orders beyond the 64-vertex bitset cap.
//!
//! Only the large extremal constructions need this; it supports the degree,
//! size and connectivity measurements their claims are checked against.

use std::collections::VecDeque;

use super::format::write_adjacency_list;
use super::{Graph, GraphError, MAX_ORDER};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseGraph {
    adj: Vec<Vec<usize>>,
}

impl SparseGraph {
    pub fn empty(n: usize) -> Self {
        SparseGraph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    /// Removes `uv`; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        let pos = self.adj[u].binary_search(&v).expect("present");
        self.adj[u].remove(pos);
        let pos = self.adj[v].binary_search(&u).expect("symmetric");
        self.adj[v].remove(pos);
        true
    }

    /// Copies `g` in with its vertices shifted by the current order; returns the offset.
    pub fn append(&mut self, g: &Graph) -> usize {
        let offset = self.order();
        for v in 0..g.order() {
            self.adj
                .push(g.neighbors(v).iter().map(|w| w + offset).collect());
        }
        offset
    }

    /// Copies `other` in with its vertices shifted by the current order;
    /// returns the offset.
    pub fn append_sparse(&mut self, other: &SparseGraph) -> usize {
        let offset = self.order();
        self.adj
            .extend(other.adj.iter().map(|row| row.iter().map(|w| w + offset).collect()));
        offset
    }

    /// Merges `u` and `v`; same relabeling rule as [`Graph::identify`].
    pub fn identify(&self, u: usize, v: usize) -> Result<SparseGraph, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        let (keep, drop) = if u < v { (u, v) } else { (v, u) };
        let relabel = |w: usize| {
            if w == drop {
                keep
            } else if w > drop {
                w - 1
            } else {
                w
            }
        };
        let mut out = SparseGraph::empty(self.order() - 1);
        for (a, b) in self.edges() {
            let (a, b) = (relabel(a), relabel(b));
            if a != b {
                out.add_edge(a, b)?;
            }
        }
        Ok(out)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)`, `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, row) in self.adj.iter().enumerate() {
            out.extend(row.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    fn reach(&self, start: usize, removed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] && !removed[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    fn components_without(&self, removed: &[bool]) -> usize {
        let mut seen = removed.to_vec();
        let mut count = 0;
        for v in 0..self.order() {
            if !seen[v] {
                count += 1;
                for (w, r) in self.reach(v, removed).into_iter().enumerate() {
                    seen[w] |= r;
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components_without(&vec![false; self.order()]) == 1
    }

    /// `κ(G)`, computed by unit-capacity max-flow over nonadjacent pairs.
    pub fn connectivity(&self) -> usize {
        let n = self.order();
        if n <= 1 || !self.is_connected() {
            return 0;
        }
        let mut best = self.min_degree();
        if best == n - 1 {
            return best;
        }
        // Some vertex among the first best+1 lies outside any minimum cut.
        let mut i = 0;
        while i <= best && i < n {
            for j in i + 1..n {
                if !self.has_edge(i, j) {
                    best = best.min(self.local_flow(i, j, best));
                }
            }
            i += 1;
        }
        best
    }

    fn local_flow(&self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.order();
        let mut net = FlowNetwork::new(2 * n);
        for v in 0..n {
            if v != s && v != t {
                net.add_arc(v, n + v);
            }
            for &w in &self.adj[v] {
                net.add_arc(n + v, w);
            }
        }
        net.max_flow(n + s, t, limit)
    }

    pub fn cut_vertices(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut removed = vec![false; self.order()];
        let mut out = Vec::new();
        for v in 0..self.order() {
            if self.degree(v) < 2 {
                continue;
            }
            removed[v] = true;
            if self.components_without(&removed) > 1 {
                out.push(v);
            }
            removed[v] = false;
        }
        Ok(out)
    }

    pub fn to_adjacency_list(&self) -> String {
        write_adjacency_list(self.order(), &self.edges())
    }

    /// Bitset form, when the order fits.
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        if self.order() == 0 || self.order() > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(self.order()));
        }
        Graph::from_edges(self.order(), self.edges())
    }
}

impl From<&Graph> for SparseGraph {
    fn from(g: &Graph) -> Self {
        let mut s = SparseGraph::default();
        s.append(g);
        s
    }
}

/// Unit-capacity residual network stored as paired arcs.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u8>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_arc(&mut self, a: usize, b: usize) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(1);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut value = 0;
        let mut via = vec![usize::MAX; self.head.len()];
        while value < limit {
            via.iter_mut().for_each(|x| *x = usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut found = false;
            while let Some(x) = queue.pop_front() {
                for &arc in &self.head[x] {
                    let y = self.to[arc];
                    if self.cap[arc] > 0 && y != source && via[y] == usize::MAX {
                        via[y] = arc;
                        if y == sink {
                            found = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                }
                if found {
                    break;
                }
            }
            if !found {
                break;
            }
            let mut y = sink;
            while y != source {
                let arc = via[y];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                y = self.to[arc ^ 1];
            }
            value += 1;
        }
        value
    }
}
