use serde::Serialize;

use super::{require, ClaimedProperties, Construction, ConstructionError, ConstructionSpec, SdiamClaim};
use crate::graph::SparseGraph;

/// A wheel of order `m`: rim `0..m-1` as a cycle, center `m-1`.
fn wheel_graph(m: usize) -> SparseGraph {
    let rim = m - 1;
    let mut g = SparseGraph::empty(m);
    for v in 0..rim {
        g.add_edge(v, (v + 1) % rim).expect("in range");
        g.add_edge(v, rim).expect("in range");
    }
    g
}

/// `K_{1,leaves}` with the center first.
fn star_graph(leaves: usize) -> SparseGraph {
    let mut g = SparseGraph::empty(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v).expect("in range");
    }
    g
}

fn cycle_graph(m: usize) -> SparseGraph {
    let mut g = SparseGraph::empty(m);
    for v in 0..m {
        g.add_edge(v, (v + 1) % m).expect("in range");
    }
    g
}

/// A cycle `C_{n-l+2}` with a star `K_{1,l-2}` whose center is identified
/// with cycle vertex 0. Cycle vertices come first, then the star leaves.
pub fn cycle_star(n: usize, l: usize) -> Result<Construction, ConstructionError> {
    const F: &str = "cycle-star";
    require(l >= 2 && l + 2 <= n, F, "2 <= l <= n-2", || format!("n={n}, l={l}"))?;
    let m = n - l + 2;
    let mut g = cycle_graph(m);
    let center = g.append_sparse(&star_graph(l - 2));
    let g = g.identify(0, center)?;
    let mut claims = ClaimedProperties::new(n, n, l, if l == 2 { 2 } else { 1 });
    claims.cut_vertex_count = Some(usize::from(l >= 3));
    if n >= 5 {
        claims.sdiam_claims.push(SdiamClaim::eq(n - 2, n - 2));
    }
    if n >= 6 {
        claims.sdiam_claims.push(SdiamClaim::le(n - 3, n - 2));
    }
    Ok(Construction {
        spec: ConstructionSpec::CycleStar { n, l },
        graph: g,
        claims,
    })
}

/// `r` fans on `P_2`, one on `P_{l-1}` and one on `P_s`, joined into a
/// 3-connected ring. Each fan `K_1 ∨ (K_1 ∪ P_j)` is laid out as its path
/// `w_1..w_j`, then the apex `u`, then the extra vertex `v`.
pub fn fan_chain(n: usize, l: usize, r: usize, s: usize) -> Result<Construction, ConstructionError> {
    const F: &str = "fan-chain";
    let got = || format!("n={n}, l={l}, r={r}, s={s}");
    require((2..=5).contains(&s), F, "2 <= s <= 5", got)?;
    require(r >= 1, F, "r >= 1", got)?;
    require(4 * r + l + s + 3 == n, F, "4r + l + s + 3 = n", got)?;
    require(l >= 6 && l + 9 <= n, F, "6 <= l <= n-9", got)?;

    let sizes: Vec<usize> = std::iter::repeat(2).take(r).chain([l - 1, s]).collect();
    let mut g = SparseGraph::empty(0);
    // (first path vertex, apex, extra vertex) per fan
    let mut fans = Vec::with_capacity(r + 2);
    for &j in &sizes {
        let base = g.order();
        for _ in 0..j + 2 {
            g.add_vertex();
        }
        let (apex, extra) = (base + j, base + j + 1);
        for t in 0..j {
            g.add_edge(apex, base + t)?;
            if t + 1 < j {
                g.add_edge(base + t, base + t + 1)?;
            }
        }
        g.add_edge(apex, extra)?;
        fans.push((base, apex, extra));
    }
    // w_t^i with 1-based t
    let w = |i: usize, t: usize| fans[i].0 + t - 1;
    let (big, small) = (r, r + 1);
    g.add_edge(w(big, 1), w(small, s))?;
    g.add_edge(w(small, 1), w(0, 1))?;
    for i in 0..r - 1 {
        g.add_edge(w(i, 2), w(i + 1, 1))?;
    }
    g.add_edge(w(r - 1, 2), w(big, l - 1))?;
    for i in 0..r + 2 {
        g.add_edge(fans[i].2, fans[(i + 1) % (r + 2)].2)?;
    }

    let mut claims = ClaimedProperties::new(n, 6 * r + 2 * s + 2 * l + 2, l, 3);
    claims.sdiam_claims.push(SdiamClaim::eq(n - 2, n - 3));
    claims.cited_edge_formula = Some((3 * n + l + s - 5) / 2);
    Ok(Construction {
        spec: ConstructionSpec::FanChain { n, l, r, s },
        graph: g,
        claims,
    })
}

/// `W_n = C_{n-1} ∨ K_1`: rim `0..n-2`, center `n-1`.
pub fn wheel(n: usize) -> Result<Construction, ConstructionError> {
    require(n >= 5, "wheel", "n >= 5", || format!("n={n}"))?;
    let mut claims = ClaimedProperties::new(n, 2 * n - 2, n - 1, 3);
    claims.kappa_exact = Some(3);
    claims.sdiam_claims.push(SdiamClaim::eq(n - 2, n - 3));
    claims.cited_edge_formula = Some(2 * n - 2);
    Ok(Construction {
        spec: ConstructionSpec::Wheel { n },
        graph: wheel_graph(n),
        claims,
    })
}

/// The modified wheels used for `k = n-2`, `d = n-3` and `Δ = n - variant`.
///
/// Starting from a wheel with rim `w_1..w_R` (`R = n - variant`) and center
/// `v_1`, variant 2 deletes `w_2w_3` and adds `x ~ w_1, w_2, w_3`; variant 3
/// further deletes `v_1w_1`, `w_1w_R` and adds `y ~ v_1, w_1, w_R`; variant 4
/// further deletes `y w_R` and adds `z ~ y, w_R, w_{R-1}`. Labels: rim
/// `0..R`, center `R`, then `x`, `y`, `z`.
pub fn wheel_mod(n: usize, variant: usize) -> Result<Construction, ConstructionError> {
    const F: &str = "wheel-mod";
    let got = || format!("n={n}, variant={variant}");
    require((2..=4).contains(&variant), F, "variant in 2..=4", got)?;
    let min_n = [6, 7, 9][variant - 2];
    require(
        n >= min_n,
        F,
        ["n >= 6 for variant 2", "n >= 7 for variant 3", "n >= 9 for variant 4"][variant - 2],
        got,
    )?;
    let rim = n - variant;
    let w = |j: usize| j - 1;
    let center = rim;
    let mut g = wheel_graph(rim + 1);
    remove(F, &mut g, w(2), w(3))?;
    let x = g.add_vertex();
    for t in [w(1), w(2), w(3)] {
        g.add_edge(x, t)?;
    }
    if variant >= 3 {
        remove(F, &mut g, center, w(1))?;
        remove(F, &mut g, w(1), w(rim))?;
        let y = g.add_vertex();
        for t in [center, w(1), w(rim)] {
            g.add_edge(y, t)?;
        }
        if variant == 4 {
            remove(F, &mut g, y, w(rim))?;
            let z = g.add_vertex();
            for t in [y, w(rim), w(rim - 1)] {
                g.add_edge(z, t)?;
            }
        }
    }
    let edges = if variant == 2 { 2 * n - 2 } else { 2 * n - 3 };
    let mut claims = ClaimedProperties::new(n, edges, n - variant, 3);
    claims.kappa_exact = Some(3);
    claims.sdiam_claims.push(SdiamClaim::eq(n - 2, n - 3));
    claims.cited_edge_formula = Some(edges);
    let built = Construction {
        spec: ConstructionSpec::WheelMod { n, variant },
        graph: g,
        claims,
    };
    // The labels above are a reading of a figure; hold the result to its
    // stated degree, size and connectivity.
    let g = &built.graph;
    if g.max_degree() != n - variant || g.edge_count() != edges || g.connectivity() != 3 {
        return Err(ConstructionError::PostCondition {
            family: F,
            detail: format!(
                "Δ={}, e={}, κ={}",
                g.max_degree(),
                g.edge_count(),
                g.connectivity()
            ),
        });
    }
    Ok(built)
}

fn remove(family: &'static str, g: &mut SparseGraph, a: usize, b: usize) -> Result<(), ConstructionError> {
    if g.remove_edge(a, b) {
        Ok(())
    } else {
        Err(ConstructionError::PostCondition {
            family,
            detail: format!("edge {a}-{b} to delete is missing"),
        })
    }
}

/// Double star with centers `0` (degree `l`) and `1` (degree `n-l`); leaves of
/// `0` follow, then leaves of `1`. `l = n-1` gives `K_{1,n-1}`.
pub fn double_star(n: usize, l: usize) -> Result<Construction, ConstructionError> {
    const F: &str = "double-star";
    require(n >= 3, F, "n >= 3", || format!("n={n}"))?;
    require(n.div_ceil(2) <= l && l < n, F, "ceil(n/2) <= l <= n-1", || format!("n={n}, l={l}"))?;
    let mut g = SparseGraph::empty(n);
    g.add_edge(0, 1)?;
    for leaf in 2..l + 1 {
        g.add_edge(0, leaf)?;
    }
    for leaf in l + 1..n {
        g.add_edge(1, leaf)?;
    }
    let mut claims = ClaimedProperties::new(n, n - 1, l, 1);
    claims.cut_vertex_count = Some(if l == n - 1 { 1 } else { 2 });
    if n >= 5 {
        claims.sdiam_claims.push(SdiamClaim::le(n - 3, n - 2));
    }
    Ok(Construction {
        spec: ConstructionSpec::DoubleStar { n, l },
        graph: g,
        claims,
    })
}

/// A wheel `W_{n-l+3}` with a star `K_{1,l-3}` identified at rim vertex 0.
/// Labels: rim, center, then star leaves.
pub fn wheel_star(n: usize, l: usize) -> Result<Construction, ConstructionError> {
    const F: &str = "wheel-star";
    require(n >= 5, F, "n >= 5", || format!("n={n}"))?;
    require(
        n.div_ceil(2) + 1 <= l && l < n,
        F,
        "ceil(n/2)+1 <= l <= n-1",
        || format!("n={n}, l={l}"),
    )?;
    let mut g = wheel_graph(n - l + 3);
    let center = g.append_sparse(&star_graph(l - 3));
    let g = g.identify(0, center)?;
    let mut claims = ClaimedProperties::new(n, 2 * n - l + 1, l, 1);
    claims.cut_vertex_count = Some(1);
    claims.sdiam_claims.push(SdiamClaim::le(n - 3, n - 3));
    claims.cited_edge_formula = Some(2 * n - l + 1);
    Ok(Construction {
        spec: ConstructionSpec::WheelStar { n, l },
        graph: g,
        claims,
    })
}

/// Upper-bound formula for `5 <= l <= ceil(n/2)`, `k = d = n-3`, by the
/// residue of `n` modulo `l+1`.
pub fn wheel_chain_formula(n: usize, l: usize) -> usize {
    let (x, i) = (n / (l + 1), n % (l + 1));
    let base = (2 * l + 3) * x + l;
    match i {
        0 => base - 8,
        1 => base - 5,
        2 | 3 => base - 2,
        _ => base + 2 * i - 7,
    }
}

/// `x = ⌊n/(l+1)⌋` wheels `W_{l+1}` linked rim-to-rim on their first three
/// rim vertices, a residue gadget for the remaining `y = n mod (l+1)`
/// vertices, and `l-5` extra edges at the first rim vertex.
///
/// Labels: each wheel as rim `v_1..v_l` then center; then the gadget (for
/// `y >= 4` a wheel `W_y` as rim then center).
pub fn wheel_chain(n: usize, l: usize) -> Result<Construction, ConstructionError> {
    const F: &str = "wheel-chain";
    require(
        l >= 5 && l <= n.div_ceil(2),
        F,
        "5 <= l <= ceil(n/2)",
        || format!("n={n}, l={l}"),
    )?;
    let (x, y) = (n / (l + 1), n % (l + 1));
    let mut g = SparseGraph::empty(0);
    let mut rims = Vec::with_capacity(x);
    for _ in 0..x {
        let base = g.append_sparse(&wheel_graph(l + 1));
        rims.push(base);
    }
    for i in 0..x.saturating_sub(1) {
        for j in 0..3 {
            g.add_edge(rims[i] + j, rims[i + 1] + j)?;
        }
    }
    let v1 = |j: usize| rims[0] + j - 1;
    match y {
        0 => {}
        1 => {
            let u = g.add_vertex();
            for j in 1..=3 {
                g.add_edge(u, v1(j))?;
            }
        }
        2 => {
            let u1 = g.add_vertex();
            let u2 = g.add_vertex();
            g.add_edge(u1, u2)?;
            g.add_edge(u1, v1(1))?;
            g.add_edge(u1, v1(2))?;
            for j in 3..=5 {
                g.add_edge(u2, v1(j))?;
            }
        }
        3 => {
            let u: Vec<usize> = (0..3).map(|_| g.add_vertex()).collect();
            g.add_edge(u[0], u[1])?;
            g.add_edge(u[0], u[2])?;
            g.add_edge(u[1], u[2])?;
            for j in 0..3 {
                g.add_edge(u[j], v1(j + 1))?;
            }
        }
        _ => {
            let star = g.append_sparse(&wheel_graph(y));
            for j in 0..3 {
                g.add_edge(star + j, v1(j + 1))?;
            }
        }
    }
    let hub = v1(1);
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
    if added < l - 5 {
        return Err(ConstructionError::PostCondition {
            family: F,
            detail: format!("only {added} of {} extra edges fit", l - 5),
        });
    }
    let gadget = match y {
        0 => 0,
        1 => 3,
        2 | 3 => 6,
        _ => 2 * (y - 1) + 3,
    };
    let edges = 2 * l * x + 3 * (x - 1) + l - 5 + gadget;
    let mut claims = ClaimedProperties::new(n, edges, l, 3);
    claims.sdiam_claims.push(SdiamClaim::le(n - 3, n - 3));
    claims.cited_edge_formula = Some(wheel_chain_formula(n, l));
    Ok(Construction {
        spec: ConstructionSpec::WheelChain { n, l },
        graph: g,
        claims,
    })
}

/// Which extra edges `v_1 v_i` [`bipartite_plus`] adds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeRange {
    /// `2 <= i <= l-a+1`: `l-a` edges, so `v_1` reaches degree `l`.
    #[default]
    Corrected,
    /// `2 <= i <= l-a` as literally written: `l-a-1` edges.
    Stated,
}

/// `K_{a,b}` (`b = n-a`, `a >= b`) plus edges from `v_1` to other vertices of
/// the `b`-side. Labels: the `b`-side `v_1..v_b` first, then the `a`-side.
pub fn bipartite_plus(n: usize, a: usize, l: usize, range: EdgeRange) -> Result<Construction, ConstructionError> {
    const F: &str = "bipartite-plus";
    let got = || format!("n={n}, a={a}, l={l}");
    require(a < n && 2 * a >= n, F, "a >= b = n-a >= 1", got)?;
    require(a < l && l < n, F, "a < l <= n-1", got)?;
    let b = n - a;
    let mut g = SparseGraph::empty(n);
    for v in 0..b {
        for u in b..n {
            g.add_edge(v, u)?;
        }
    }
    let last = match range {
        EdgeRange::Corrected => l - a + 1,
        EdgeRange::Stated => l - a,
    };
    for i in 2..=last {
        g.add_edge(0, i - 1)?;
    }
    let mut claims = ClaimedProperties::new(n, a * b + l - a, l, b);
    for k in a + 1..n {
        claims.sdiam_claims.push(SdiamClaim::eq(k, k - 1));
    }
    claims.cited_edge_formula = Some(a * b + l - a);
    Ok(Construction {
        spec: ConstructionSpec::BipartitePlus { n, a, l, range },
        graph: g,
        claims,
    })
}

/// A caterpillar whose spine has at most `d-k` edges and whose first spine
/// vertex has degree `l`; every such tree has `sdiam_k <= d`.
///
/// The spine has `min(d-k+1, n-l)` vertices. The first spine vertex takes
/// `l-1` leaves (`l` with a one-vertex spine), the last takes one, and the rest
/// are filled in spine order up to degree `l`. Labels: spine, then leaves in
/// spine order.
pub fn broom_tree(n: usize, k: usize, d: usize, l: usize) -> Result<Construction, ConstructionError> {
    const F: &str = "broom-tree";
    let got = || format!("n={n}, k={k}, d={d}, l={l}");
    require(2 <= k && k <= d && d < n, F, "2 <= k <= d <= n-1", got)?;
    let span = d - k + 1;
    let min_l = 2 + (n - d + k - 3).div_ceil(span);
    require(min_l <= l && l < n, F, "2 + ceil((n-d+k-3)/(d-k+1)) <= l <= n-1", got)?;

    let m = span.min(n - l);
    let mut leaves = vec![0usize; m];
    if m == 1 {
        leaves[0] = n - 1;
    } else {
        leaves[0] = l - 1;
        leaves[m - 1] = 1;
        let mut rest = n - m - l;
        for (i, slot) in leaves.iter_mut().enumerate().skip(1) {
            let spine_deg = if i + 1 == m { 1 } else { 2 };
            let room = l - spine_deg - *slot;
            let take = room.min(rest);
            *slot += take;
            rest -= take;
        }
        if rest > 0 {
            return Err(ConstructionError::PostCondition {
                family: F,
                detail: format!("{rest} leaves do not fit"),
            });
        }
    }
    let mut g = SparseGraph::empty(n);
    for i in 1..m {
        g.add_edge(i - 1, i)?;
    }
    let mut next = m;
    for (i, &count) in leaves.iter().enumerate() {
        for _ in 0..count {
            g.add_edge(i, next)?;
            next += 1;
        }
    }
    let mut claims = ClaimedProperties::new(n, n - 1, l, 1);
    claims.sdiam_claims.push(SdiamClaim::le(k, d));
    Ok(Construction {
        spec: ConstructionSpec::BroomTree { n, k, d, l },
        graph: g,
        claims,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{verify_claims, DEFAULT_SDIAM_BUDGET};
    use super::*;
    use crate::graph::{connectivity, cut_vertices, Graph};

    fn assert_verified(c: &Construction) {
        let report = verify_claims(c, DEFAULT_SDIAM_BUDGET);
        let failed: Vec<_> = report.failures().collect();
        assert!(failed.is_empty(), "{:?}: {failed:?}", c.spec);
    }

    #[test]
    fn cycle_star_examples() {
        let c = cycle_star(7, 4).unwrap();
        assert_eq!((c.graph.order(), c.graph.edge_count(), c.graph.max_degree()), (7, 7, 4));
        assert_eq!(c.graph.cut_vertices().unwrap(), vec![0]);
        assert_eq!(cycle_star(6, 2).unwrap().to_graph().unwrap(), Graph::cycle(6).unwrap());
        assert_verified(&cycle_star(8, 3).unwrap());
        assert!(cycle_star(6, 5).is_err());
    }

    #[test]
    fn cycle_star_matches_bitset_algebra() {
        let (n, l) = (9, 5);
        let c = Graph::cycle(n - l + 2).unwrap();
        let joined = c.disjoint_union(&Graph::star(l - 2).unwrap()).unwrap();
        let expect = joined.identify(0, n - l + 2).unwrap();
        assert_eq!(cycle_star(n, l).unwrap().to_graph().unwrap(), expect);
    }

    #[test]
    fn fan_chain_examples() {
        assert!(fan_chain(19, 6, 1, 5).is_err());
        let c = fan_chain(18, 6, 1, 5).unwrap();
        assert_eq!(c.graph.edge_count(), 30);
        assert_eq!(c.claims.cited_edge_formula, Some(30));
        assert!(c.graph.connectivity() >= 3);
        assert_verified(&c);
    }

    #[test]
    fn wheels() {
        let w = wheel(6).unwrap();
        assert_eq!((w.graph.max_degree(), w.graph.edge_count(), w.graph.connectivity()), (5, 10, 3));
        let w5 = Graph::cycle(5).unwrap().join(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!(w.to_graph().unwrap(), w5);
        let m2 = wheel_mod(8, 2).unwrap();
        assert_eq!((m2.graph.max_degree(), m2.graph.edge_count()), (6, 14));
        let m3 = wheel_mod(9, 3).unwrap();
        assert_eq!((m3.graph.max_degree(), m3.graph.edge_count()), (6, 15));
        let m4 = wheel_mod(10, 4).unwrap();
        assert_eq!((m4.graph.max_degree(), m4.graph.edge_count()), (6, 17));
        for c in [w, m2, m3, m4] {
            assert_verified(&c);
        }
        assert!(wheel_mod(8, 4).is_err());
    }

    #[test]
    fn double_star_examples() {
        let c = double_star(8, 5).unwrap();
        let g = c.to_graph().unwrap();
        assert_eq!((g.degree(0), g.degree(1), g.edge_count()), (5, 3, 7));
        assert_eq!(cut_vertices(&g).unwrap().len(), 2);
        assert_eq!(double_star(6, 5).unwrap().to_graph().unwrap(), Graph::star(5).unwrap());
        assert_verified(&c);
    }

    #[test]
    fn wheel_star_examples() {
        let c = wheel_star(9, 6).unwrap();
        assert_eq!((c.graph.edge_count(), c.graph.max_degree()), (13, 6));
        assert_eq!(c.graph.cut_vertices().unwrap().len(), 1);
        assert_verified(&c);
    }

    #[test]
    fn wheel_chain_examples() {
        let c = wheel_chain(12, 5).unwrap();
        assert_eq!(c.graph.edge_count(), 23);
        assert!(connectivity(&c.to_graph().unwrap()) >= 3);
        assert_eq!(wheel_chain(13, 5).unwrap().graph.edge_count(), 26);
        for n in 9..=12 {
            assert_verified(&wheel_chain(n, 5).unwrap());
        }
    }

    #[test]
    fn bipartite_plus_ranges() {
        let c = bipartite_plus(8, 4, 6, EdgeRange::Corrected).unwrap();
        assert_eq!(c.graph.edge_count(), 18);
        assert_eq!(c.graph.max_degree(), 6);
        assert!(c.claims.sdiam_claims.iter().any(|s| s.k == 6));
        assert_verified(&c);
        // The literal range adds one edge fewer, so v_1 stops at degree l-1.
        let stated = bipartite_plus(8, 4, 6, EdgeRange::Stated).unwrap();
        assert_eq!(stated.graph.max_degree(), 5);
        let report = verify_claims(&stated, DEFAULT_SDIAM_BUDGET);
        let failed: Vec<&str> = report.failures().map(|c| c.property.as_str()).collect();
        assert_eq!(failed, ["edge_count", "max_degree"]);
        assert!(c.graph.edge_count() <= 49 / 4 + 6);
    }

    #[test]
    fn broom_tree_examples() {
        let c = broom_tree(10, 3, 6, 4).unwrap();
        assert_eq!((c.graph.edge_count(), c.graph.max_degree()), (9, 4));
        assert!(c.graph.is_connected());
        assert_verified(&c);
        let star = broom_tree(7, 4, 4, 6).unwrap();
        assert_eq!(star.to_graph().unwrap(), Graph::star(6).unwrap());
        assert!(broom_tree(7, 4, 4, 5).is_err());
    }

    #[test]
    fn exports_are_deterministic() {
        let a = wheel_chain(23, 6).unwrap().graph.to_adjacency_list();
        let b = wheel_chain(23, 6).unwrap().graph.to_adjacency_list();
        assert_eq!(a, b);
    }
}
