//! A minimally 4-connected graph on 32 vertices and the chain built from
//! copies of it.
//!
//! The 32-vertex graph used here is the vertex–face incidence graph of the
//! icosahedron (12 vertices of degree 5, 20 faces of degree 3) plus a perfect
//! matching between faces that share an edge, which lifts every face to
//! degree 4. Faces are `v_1..v_20` (labels `0..20`) and icosahedron vertices
//! are `u_1..u_12` (labels `20..32`). Every edge meets a degree-4 face vertex,
//! so once the graph is 4-connected it is minimally so.

use std::collections::BTreeMap;

use super::{require, ClaimedProperties, Construction, ConstructionError, ConstructionSpec, SdiamClaim};
use crate::graph::SparseGraph;

const F: &str = "a32";
const FACES: usize = 20;

/// Icosahedron faces: five around the top vertex 0, two bands of five, five
/// around the bottom vertex 11. Upper ring `1..=5`, lower ring `6..=10`.
fn icosahedron_faces() -> Vec<[usize; 3]> {
    let a = |i: usize| 1 + i % 5;
    let b = |i: usize| 6 + i % 5;
    let mut faces = Vec::with_capacity(FACES);
    faces.extend((0..5).map(|i| [0, a(i), a(i + 1)]));
    faces.extend((0..5).map(|i| [a(i), a(i + 1), b(i)]));
    faces.extend((0..5).map(|i| [b(i), b(i + 1), a(i + 1)]));
    faces.extend((0..5).map(|i| [11, b(i), b(i + 1)]));
    faces
}

fn a32_graph() -> SparseGraph {
    let faces = icosahedron_faces();
    let mut g = SparseGraph::empty(32);
    for (f, corners) in faces.iter().enumerate() {
        for &c in corners {
            g.add_edge(f, FACES + c).expect("in range");
        }
    }
    // Top face i shares edge a_i a_{i+1} with band face i; lower band face i
    // shares b_i b_{i+1} with bottom face i.
    for i in 0..5 {
        g.add_edge(i, 5 + i).expect("in range");
        g.add_edge(10 + i, 15 + i).expect("in range");
    }
    g
}

pub fn a32() -> Result<Construction, ConstructionError> {
    let g = a32_graph();
    let degrees = g.degrees();
    let pattern_ok = degrees[..FACES].iter().all(|&d| d == 4) && degrees[FACES..].iter().all(|&d| d == 5);
    let every_edge_tight = g.edges().iter().all(|&(u, v)| g.degree(u) == 4 || g.degree(v) == 4);
    let kappa = g.connectivity();
    if !pattern_ok || !every_edge_tight || kappa != 4 {
        return Err(ConstructionError::PostCondition {
            family: F,
            detail: format!("degrees {degrees:?}, κ={kappa}"),
        });
    }
    let mut claims = ClaimedProperties::new(32, 70, 5, 4);
    claims.kappa_exact = Some(4);
    claims.degree_counts = Some(BTreeMap::from([(4, 20), (5, 12)]));
    claims.minimally_connected = Some(4);
    claims.sdiam_claims.push(SdiamClaim::eq(29, 28));
    Ok(Construction {
        spec: ConstructionSpec::A32,
        graph: g,
        claims,
    })
}

/// Label of `v_j` (1-based) in copy `i` (0-based).
fn v(i: usize, j: usize) -> usize {
    32 * i + j - 1
}

/// `x = ⌊n/32⌋` linked copies of the 32-vertex graph, `⌊y/4⌋` blocks of `K_4`
/// and `y mod 4` four-leaf stars hung on distinct degree-4 vertices of the
/// first three copies (`y = n mod 32`), and `l-5` extra edges at `u_12` of the
/// first copy.
///
/// Labels: the copies in order, then each `K_4` block, then each star center.
pub fn a32_chain(n: usize, l: usize) -> Result<Construction, ConstructionError> {
    const F: &str = "a32-chain";
    require(n >= 96, F, "n >= 96", || format!("n={n}"))?;
    require((5..n).contains(&l), F, "5 <= l <= n-1", || format!("n={n}, l={l}"))?;
    let base = a32()?.graph;
    let (x, y) = (n / 32, n % 32);
    let (z, a) = (y / 4, y % 4);

    let mut g = SparseGraph::empty(0);
    for _ in 0..x {
        g.append_sparse(&base);
    }
    for i in 0..x - 1 {
        for j in 1..=4 {
            g.add_edge(v(i, j + 4), v(i + 1, j))?;
        }
    }
    let mut targets = Vec::with_capacity(40);
    targets.extend((1..=4).map(|j| v(0, j)));
    for i in 0..3 {
        targets.extend((9..=20).map(|j| v(i, j)));
    }
    let mut next = targets.iter().copied();
    for _ in 0..z {
        let block: Vec<usize> = (0..4).map(|_| g.add_vertex()).collect();
        for p in 0..4 {
            for q in p + 1..4 {
                g.add_edge(block[p], block[q])?;
            }
            g.add_edge(block[p], next.next().expect("at most 40 attachments"))?;
        }
    }
    for _ in 0..a {
        let center = g.add_vertex();
        for _ in 0..4 {
            g.add_edge(center, next.next().expect("at most 40 attachments"))?;
        }
    }
    let hub = 32 - 1;
    let mut added = 0;
    for t in 0..g.order() {
        if added == l - 5 {
            break;
        }
        if t != hub && !g.has_edge(hub, t) && g.degree(t) < l {
            g.add_edge(hub, t)?;
            added += 1;
        }
    }

    let edges = 74 * x - 4 + 10 * z + 4 * a + l - 5;
    let mut claims = ClaimedProperties::new(n, edges, l, 4);
    claims.sdiam_claims.push(SdiamClaim::eq(n - 3, n - 4));
    claims.cited_edge_formula = (y >= 1).then(|| 74 * x + 2 * y + l - 9);
    Ok(Construction {
        spec: ConstructionSpec::A32Chain { n, l },
        graph: g,
        claims,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{verify_claims, DEFAULT_SDIAM_BUDGET};
    use super::*;

    #[test]
    fn faces_are_a_triangulation() {
        let faces = icosahedron_faces();
        let mut per_vertex = [0; 12];
        let mut per_edge = BTreeMap::new();
        for f in &faces {
            for &c in f {
                per_vertex[c] += 1;
            }
            for (p, q) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
                *per_edge.entry((p.min(q), p.max(q))).or_insert(0) += 1;
            }
        }
        assert_eq!(per_vertex, [5; 12]);
        assert_eq!(per_edge.len(), 30);
        assert!(per_edge.values().all(|&c| c == 2));
    }

    #[test]
    fn a32_claims_hold() {
        let c = a32().unwrap();
        assert_eq!(c.graph.edge_count(), 70);
        let report = verify_claims(&c, DEFAULT_SDIAM_BUDGET);
        assert!(report.all_hold(), "{:?}", report.failures().collect::<Vec<_>>());
        assert!(report.skipped.is_empty());
    }

    #[test]
    fn chain_structure() {
        let c = a32_chain(97, 7).unwrap();
        assert_eq!(c.graph.order(), 97);
        assert_eq!(c.graph.max_degree(), 7);
        assert!(c.graph.connectivity() >= 4);
        assert_eq!(c.claims.edge_count, c.graph.edge_count());
        assert!(a32_chain(95, 7).is_err());
        assert!(a32_chain(100, 4).is_err());
    }
}
