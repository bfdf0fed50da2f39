//! Vertex connectivity by Menger's theorem and cut-vertex detection.
//!
//! Local connectivity between two nonadjacent vertices is the value of a
//! unit-capacity max-flow on the split-vertex digraph: each vertex `v` becomes
//! `v_in -> v_out`, and each edge `uv` becomes `u_out -> v_in` and
//! `v_out -> u_in`. With every capacity equal to one, the residual network is a
//! 128-node bit matrix and augmenting along an arc is a single bit flip.

use super::{Graph, GraphError, VertexSet};

/// `κ(G)`: the size of a smallest vertex set whose removal disconnects `G` or
/// leaves a single vertex. `κ(K_n) = n - 1`; a disconnected graph gives 0.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 || !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    if best == n - 1 {
        return best;
    }
    for s in 0..n {
        let non_neighbors = g.vertices().difference(g.neighbors(s));
        for t in non_neighbors.iter().filter(|&t| t > s) {
            best = best.min(flow(g, s, t, best));
            if best == 0 {
                return 0;
            }
        }
    }
    best
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths, for
/// nonadjacent `s != t`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> Result<usize, GraphError> {
    for v in [s, t] {
        if v >= g.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    if s == t {
        return Err(GraphError::SameVertex(s));
    }
    if g.has_edge(s, t) {
        // The edge itself is one of the paths.
        let h = g.without_edge(s, t)?;
        return Ok(flow(&h, s, t, usize::MAX) + 1);
    }
    Ok(flow(g, s, t, usize::MAX))
}

/// Unit-capacity max-flow from `s_out` to `t_in`, stopping once `limit` is hit.
fn flow(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.order();
    // Node ids: v_in = v, v_out = n + v.
    let mut res = [0u128; 128];
    for v in 0..n {
        if v != s && v != t {
            res[v] |= 1u128 << (n + v);
        }
        for w in g.neighbors(v) {
            res[n + v] |= 1u128 << w;
        }
    }
    let source = n + s;
    let sink = t;
    let mut parent = [0u8; 128];
    let mut value = 0;
    while value < limit {
        // BFS over the residual network.
        let mut seen: u128 = 1u128 << source;
        let mut frontier: u128 = seen;
        let mut found = false;
        'bfs: while frontier != 0 {
            let mut next: u128 = 0;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                let mut out = res[x] & !seen & !next;
                while out != 0 {
                    let y = out.trailing_zeros() as usize;
                    out &= out - 1;
                    parent[y] = x as u8;
                    next |= 1u128 << y;
                    if y == sink {
                        found = true;
                        break 'bfs;
                    }
                }
            }
            seen |= next;
            frontier = next;
        }
        if !found {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y] as usize;
            res[x] &= !(1u128 << y);
            res[y] |= 1u128 << x;
            y = x;
        }
        value += 1;
    }
    value
}

/// Vertices whose removal disconnects `g`.
pub fn cut_vertices(g: &Graph) -> Result<VertexSet, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let mut cuts = VertexSet::EMPTY;
    if g.order() <= 2 {
        return Ok(cuts);
    }
    for v in 0..g.order() {
        // A vertex of degree one never separates a connected graph.
        if g.degree(v) >= 2 && g.component_count_without(VertexSet::singleton(v)) > 1 {
            cuts.insert(v);
        }
    }
    Ok(cuts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Exhaustive vertex-cut enumeration, independent of the flow code.
    fn brute_connectivity(g: &Graph) -> usize {
        let n = g.order();
        let mut best = n.saturating_sub(1);
        for removed in 0u64..(1u64 << n) {
            let x = VertexSet(removed);
            let rest = g.vertices().difference(x);
            let k = x.len();
            if k >= best {
                continue;
            }
            if rest.len() <= 1 || !g.is_connected_within(rest) {
                best = k;
            }
        }
        best
    }

    fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = super::super::pair_count(n);
            (Just(n), prop::collection::vec(any::<bool>(), pairs)).prop_map(|(n, bits)| {
                let mut g = Graph::empty(n).unwrap();
                let mut e = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[e] {
                            g.add_edge(i, j).unwrap();
                        }
                        e += 1;
                    }
                }
                g
            })
        })
    }

    #[test]
    fn known_values() {
        for n in 3..=9 {
            assert_eq!(connectivity(&Graph::cycle(n).unwrap()), 2, "C_{n}");
        }
        assert_eq!(connectivity(&Graph::complete(5).unwrap()), 4);
        assert_eq!(connectivity(&Graph::complete(1).unwrap()), 0);
        assert_eq!(connectivity(&Graph::complete(2).unwrap()), 1);
        assert_eq!(connectivity(&Graph::path(4).unwrap()), 1);
        assert_eq!(connectivity(&Graph::empty(3).unwrap()), 0);
        assert_eq!(connectivity(&Graph::complete_bipartite(3, 4).unwrap()), 3);
    }

    #[test]
    fn local_values() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(local_connectivity(&c6, 0, 3).unwrap(), 2);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(local_connectivity(&k4, 0, 1).unwrap(), 3);
        assert!(local_connectivity(&k4, 2, 2).is_err());
    }

    #[test]
    fn cut_vertex_examples() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(cut_vertices(&p4).unwrap(), VertexSet::from_vertices([1, 2]));
        assert!(cut_vertices(&Graph::cycle(6).unwrap()).unwrap().is_empty());
        // double star on centers 0 and 1
        let ds = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6)]).unwrap();
        assert_eq!(cut_vertices(&ds).unwrap(), VertexSet::from_vertices([0, 1]));
        assert_eq!(
            cut_vertices(&Graph::empty(2).unwrap()),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn exhaustive_oracle_agreement_up_to_six() {
        for n in 1..=6 {
            let pairs = super::super::pair_count(n);
            for mask in 0u64..(1u64 << pairs) {
                let g = Graph::from_edge_mask(n, mask);
                assert_eq!(connectivity(&g), brute_connectivity(&g), "{g:?}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(3000))]

        #[test]
        fn flow_matches_cut_enumeration(g in graph_strategy(7)) {
            prop_assert_eq!(connectivity(&g), brute_connectivity(&g));
        }

        #[test]
        fn connectivity_at_most_min_degree(g in graph_strategy(12)) {
            prop_assume!(g.order() >= 2);
            prop_assert!(connectivity(&g) <= g.min_degree());
        }

        #[test]
        fn cut_vertices_by_recount(g in graph_strategy(10)) {
            prop_assume!(g.is_connected());
            let cuts = cut_vertices(&g).unwrap();
            for v in 0..g.order() {
                let h = g.delete_vertices(VertexSet::singleton(v)).ok();
                let splits = h.map_or(false, |h| h.components().len() > 1);
                prop_assert_eq!(cuts.contains(v), splits);
            }
        }
    }
}
