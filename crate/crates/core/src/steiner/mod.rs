//! Steiner distance and the parameters built on it.
//!
//! `d_G(S)` is the fewest edges of a connected subgraph containing `S`. Two
//! exact methods are provided: a Dreyfus–Wagner dynamic program over terminal
//! subsets ([`steiner_distance_dp`]) and an enumeration of connecting vertex
//! sets outside `S` ([`steiner_distance_complement`]). [`steiner_distance`]
//! picks the cheaper one. [`SteinerTable`] tabulates every subset at once for
//! small graphs.

mod table;

pub use table::{SteinerTable, TABLE_MAX_ORDER};

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{connectivity, cut_vertices, Graph, VertexSet};
use crate::subsets::{binomial, spread, KSubsets};

/// A Steiner distance: a finite edge count or infinity.
///
/// `Infinite` orders above every finite value and absorbs addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(u32),
    Infinite,
}

impl Dist {
    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    pub fn saturating_add(self, extra: u32) -> Dist {
        match self {
            Dist::Finite(d) => Dist::Finite(d + extra),
            Dist::Infinite => Dist::Infinite,
        }
    }
}

impl From<u32> for Dist {
    fn from(d: u32) -> Self {
        Dist::Finite(d)
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Dist::Finite(d) => serializer.serialize_u32(*d),
            Dist::Infinite => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteinerError {
    #[error("terminal set needs at least two vertices, got {0}")]
    TooFewTerminals(usize),
    #[error("terminal set is not contained in the vertex set")]
    NotSubset,
    #[error("k = {k} is outside {min}..={n}")]
    KOutOfRange { k: usize, min: usize, n: usize },
    #[error("vertex {0} is not in the graph")]
    VertexOutOfRange(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least two vertices")]
    OrderTooSmall,
}

fn check_terminals(g: &Graph, s: VertexSet) -> Result<(), SteinerError> {
    if !s.is_subset(g.vertices()) {
        return Err(SteinerError::NotSubset);
    }
    if s.len() < 2 {
        return Err(SteinerError::TooFewTerminals(s.len()));
    }
    Ok(())
}

/// The component containing all of `s`, or `None` if `s` spans several.
fn common_component(g: &Graph, s: VertexSet) -> Option<VertexSet> {
    let comp = g.reach(s.first()?, g.vertices());
    s.is_subset(comp).then_some(comp)
}

/// `d_G(S)`, choosing the dynamic program when `|S| < n - |S|` and the
/// complement enumeration otherwise.
pub fn steiner_distance(g: &Graph, s: VertexSet) -> Result<Dist, SteinerError> {
    if s.len() < g.order() - s.len() {
        steiner_distance_dp(g, s)
    } else {
        steiner_distance_complement(g, s)
    }
}

/// `d_G(S)` by the Dreyfus–Wagner recurrence; exponential in `|S|` only.
pub fn steiner_distance_dp(g: &Graph, s: VertexSet) -> Result<Dist, SteinerError> {
    check_terminals(g, s)?;
    let Some(comp) = common_component(g, s) else {
        return Ok(Dist::Infinite);
    };
    let verts: Vec<usize> = comp.iter().collect();
    let m = verts.len();
    let mut index = [usize::MAX; 64];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    // All-pairs BFS distances inside the component (all finite).
    let mut dist = vec![0u32; m * m];
    for (i, &v) in verts.iter().enumerate() {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        let mut level = 0;
        while !frontier.is_empty() {
            for w in frontier {
                dist[i * m + index[w]] = level;
            }
            level += 1;
            frontier = g.neighborhood(frontier).difference(seen);
            seen = seen.union(frontier);
        }
    }

    let terminals: Vec<usize> = s.iter().map(|v| index[v]).collect();
    let t = terminals.len();
    // Tree over terminals 0..t-1; the last terminal serves as the root.
    let q = t - 1;
    let full = (1usize << q) - 1;
    let mut dp = vec![u32::MAX; (full + 1) * m];
    for (i, &ti) in terminals[..q].iter().enumerate() {
        let row = &mut dp[(1 << i) * m..(1 << i) * m + m];
        row.copy_from_slice(&dist[ti * m..ti * m + m]);
    }
    for mask in 1..=full {
        if mask & (mask - 1) == 0 {
            continue;
        }
        let mut best = vec![u32::MAX; m];
        // Split at v: each proper subset paired with its complement, once.
        let low = mask & mask.wrapping_neg();
        let mut sub = (mask - 1) & mask;
        while sub != 0 {
            if sub & low != 0 {
                let other = mask ^ sub;
                for (v, b) in best.iter_mut().enumerate() {
                    let c = dp[sub * m + v] + dp[other * m + v];
                    if c < *b {
                        *b = c;
                    }
                }
            }
            sub = (sub - 1) & mask;
        }
        // Move the junction to any other vertex along a shortest path.
        let row = &mut dp[mask * m..mask * m + m];
        for (v, slot) in row.iter_mut().enumerate() {
            *slot = (0..m).map(|u| best[u] + dist[u * m + v]).min().expect("m >= 1");
        }
    }
    let root = terminals[q];
    Ok(Dist::Finite(dp[full * m + root]))
}

/// `d_G(S)` as `|S| + |X| - 1` for the smallest `X ⊆ V \ S` with `G[S ∪ X]`
/// connected; exponential in `n - |S|` only.
pub fn steiner_distance_complement(g: &Graph, s: VertexSet) -> Result<Dist, SteinerError> {
    check_terminals(g, s)?;
    let Some(comp) = common_component(g, s) else {
        return Ok(Dist::Infinite);
    };
    let outside: Vec<usize> = comp.difference(s).iter().collect();
    for x in 0..=outside.len() {
        for pick in KSubsets::new(outside.len(), x) {
            let t = VertexSet(s.bits() | spread(pick, &outside));
            if g.is_connected_within(t) {
                return Ok(Dist::Finite((s.len() + x - 1) as u32));
            }
        }
    }
    unreachable!("the whole component is connected")
}

fn check_k(g: &Graph, k: usize, min: usize) -> Result<(), SteinerError> {
    if k < min || k > g.order() {
        return Err(SteinerError::KOutOfRange {
            k,
            min,
            n: g.order(),
        });
    }
    Ok(())
}

/// Steiner `k`-eccentricity `e_k(v)`: the largest `d_G(S)` over `k`-sets
/// containing `v`.
pub fn steiner_ecc(g: &Graph, v: usize, k: usize) -> Result<Dist, SteinerError> {
    check_k(g, k, 2)?;
    if v >= g.order() {
        return Err(SteinerError::VertexOutOfRange(v));
    }
    let others: Vec<usize> = (0..g.order()).filter(|&w| w != v).collect();
    let mut worst = Dist::Finite(0);
    for pick in KSubsets::new(others.len(), k - 1) {
        let s = VertexSet(spread(pick, &others) | 1u64 << v);
        worst = worst.max(steiner_distance(g, s)?);
        if worst == Dist::Infinite {
            break;
        }
    }
    Ok(worst)
}

/// Steiner `k`-diameter: the largest `d_G(S)` over all `k`-sets.
pub fn sdiam(g: &Graph, k: usize) -> Result<Dist, SteinerError> {
    check_k(g, k, 2)?;
    let mut worst = Dist::Finite(0);
    for s in KSubsets::new(g.order(), k) {
        worst = worst.max(steiner_distance(g, VertexSet(s))?);
        if worst == Dist::Infinite {
            break;
        }
    }
    Ok(worst)
}

/// Steiner `k`-radius: the smallest `e_k(v)`.
pub fn srad(g: &Graph, k: usize) -> Result<Dist, SteinerError> {
    check_k(g, k, 2)?;
    let mut ecc = vec![Dist::Finite(0); g.order()];
    for s in KSubsets::new(g.order(), k) {
        let d = steiner_distance(g, VertexSet(s))?;
        for v in VertexSet(s) {
            ecc[v] = ecc[v].max(d);
        }
    }
    Ok(ecc.into_iter().min().expect("n >= 2"))
}

/// Steiner Wiener index `SW_k`: the sum of `d_G(S)` over all `k`-sets.
pub fn steiner_wiener(g: &Graph, k: usize) -> Result<u128, SteinerError> {
    check_k(g, k, 1)?;
    if !g.is_connected() {
        return Err(SteinerError::Disconnected);
    }
    if k == 1 {
        return Ok(0);
    }
    if g.order() <= TABLE_MAX_ORDER {
        return Ok(SteinerTable::new(g).wiener(k));
    }
    let mut total = 0u128;
    for s in KSubsets::new(g.order(), k) {
        let d = steiner_distance(g, VertexSet(s))?;
        total += d.finite().expect("connected graph") as u128;
    }
    Ok(total)
}

/// Average Steiner `k`-distance `μ_k = SW_k / C(n, k)`, in lowest terms.
pub fn avg_steiner_distance(g: &Graph, k: usize) -> Result<Ratio<u128>, SteinerError> {
    check_k(g, k, 2)?;
    let sw = steiner_wiener(g, k)?;
    Ok(Ratio::new(sw, binomial(g.order() as u64, k as u64)))
}

/// Per-graph summary: connectivity, cut vertices, and `sdiam_k`/`srad_k` for
/// every `2 <= k <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteinerProfile {
    pub n: usize,
    pub kappa: usize,
    /// `None` for a disconnected graph.
    pub cut_count: Option<usize>,
    pub sdiam: BTreeMap<usize, Dist>,
    pub srad: BTreeMap<usize, Dist>,
}

pub fn steiner_profile(g: &Graph) -> Result<SteinerProfile, SteinerError> {
    let n = g.order();
    if n < 2 {
        return Err(SteinerError::OrderTooSmall);
    }
    let (sdiam_all, srad_all) = if n <= TABLE_MAX_ORDER {
        let table = SteinerTable::new(g);
        (table.sdiam_all(), table.srad_all())
    } else {
        let mut d = Vec::with_capacity(n + 1);
        let mut r = Vec::with_capacity(n + 1);
        d.extend([Dist::Finite(0); 2]);
        r.extend([Dist::Finite(0); 2]);
        for k in 2..=n {
            d.push(sdiam(g, k)?);
            r.push(srad(g, k)?);
        }
        (d, r)
    };
    Ok(SteinerProfile {
        n,
        kappa: connectivity(g),
        cut_count: cut_vertices(g).ok().map(VertexSet::len),
        sdiam: (2..=n).map(|k| (k, sdiam_all[k])).collect(),
        srad: (2..=n).map(|k| (k, srad_all[k])).collect(),
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Minimum over connected supersets `T ⊇ S` of the edge count of an
    /// explicitly grown BFS spanning tree of `G[T]`.
    pub(crate) fn naive_steiner(g: &Graph, s: VertexSet) -> Dist {
        let n = g.order();
        let mut best = Dist::Infinite;
        for t in 0u64..(1u64 << n) {
            let t = VertexSet(t);
            if !s.is_subset(t) {
                continue;
            }
            let root = s.first().unwrap();
            let mut tree_edges = 0u32;
            let mut seen = VertexSet::singleton(root);
            let mut queue = vec![root];
            while let Some(x) = queue.pop() {
                for y in g.neighbors(x).intersection(t).difference(seen) {
                    seen.insert(y);
                    tree_edges += 1;
                    queue.push(y);
                }
            }
            if seen == t {
                best = best.min(Dist::Finite(tree_edges));
            }
        }
        best
    }

    pub(crate) fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
        let p = rng.gen_range(0.15..0.85);
        let mut g = Graph::empty(n).unwrap();
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(p) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    fn random_terminals(rng: &mut impl Rng, n: usize) -> VertexSet {
        loop {
            let s = VertexSet(rng.gen_range(0..1u64 << n));
            if s.len() >= 2 {
                return s;
            }
        }
    }

    #[test]
    fn dist_ordering_and_format() {
        assert!(Dist::Finite(63) < Dist::Infinite);
        assert_eq!(Dist::Infinite.saturating_add(3), Dist::Infinite);
        assert_eq!(Dist::Finite(2).to_string(), "2");
        assert_eq!(Dist::Infinite.to_string(), "inf");
        assert_eq!(serde_json::to_string(&Dist::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Dist::Finite(4)).unwrap(), "4");
    }

    #[test]
    fn reference_distances() {
        let k4 = Graph::complete(4).unwrap();
        let p5 = Graph::path(5).unwrap();
        let c6 = Graph::cycle(6).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let two_k2 = k2.disjoint_union(&k2).unwrap();
        let s = |v: &[usize]| VertexSet::from_vertices(v.iter().copied());
        for f in [steiner_distance, steiner_distance_dp, steiner_distance_complement] {
            assert_eq!(f(&k4, s(&[0, 1, 3])).unwrap(), Dist::Finite(2));
            assert_eq!(f(&p5, s(&[0, 4])).unwrap(), Dist::Finite(4));
            assert_eq!(f(&two_k2, s(&[0, 2])).unwrap(), Dist::Infinite);
            assert_eq!(f(&c6, s(&[0, 2, 4])).unwrap(), Dist::Finite(4));
        }
        assert_eq!(naive_steiner(&c6, s(&[0, 2, 4])), Dist::Finite(4));
        assert_eq!(
            steiner_distance(&k4, s(&[1])),
            Err(SteinerError::TooFewTerminals(1))
        );
        assert_eq!(steiner_distance(&k4, s(&[1, 7])), Err(SteinerError::NotSubset));
    }

    #[test]
    fn exhaustive_agreement_up_to_five() {
        for n in 2..=5 {
            for mask in 0u64..(1u64 << crate::graph::pair_count(n)) {
                let g = Graph::from_edge_mask(n, mask);
                for s in 0u64..(1u64 << n) {
                    let s = VertexSet(s);
                    if s.len() < 2 {
                        continue;
                    }
                    let a = steiner_distance_dp(&g, s).unwrap();
                    let b = steiner_distance_complement(&g, s).unwrap();
                    assert_eq!(a, b, "{g:?} {s:?}");
                    assert_eq!(a, naive_steiner(&g, s), "{g:?} {s:?}");
                }
            }
        }
    }

    #[test]
    fn random_agreement() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xd1e7);
        for _ in 0..3000 {
            let n = rng.gen_range(6..=8);
            let g = random_graph(&mut rng, n);
            let s = random_terminals(&mut rng, n);
            let a = steiner_distance_dp(&g, s).unwrap();
            assert_eq!(a, steiner_distance_complement(&g, s).unwrap(), "{g:?} {s:?}");
            if n == 6 {
                assert_eq!(a, naive_steiner(&g, s));
            }
            if let Dist::Finite(d) = a {
                assert!(d as usize >= s.len() - 1);
            }
        }
    }

    #[test]
    fn two_terminals_give_path_distance() {
        let c9 = Graph::cycle(9).unwrap();
        for v in 1..9 {
            let d = steiner_distance(&c9, VertexSet::from_vertices([0, v])).unwrap();
            assert_eq!(d, Dist::Finite(v.min(9 - v) as u32));
        }
    }

    #[test]
    fn observation_formulas() {
        for n in 3..=9 {
            let c = Graph::cycle(n).unwrap();
            let k = Graph::complete(n).unwrap();
            for kk in 2..=n {
                let expect = (n * (kk - 1) / kk) as u32;
                assert_eq!(sdiam(&c, kk).unwrap(), Dist::Finite(expect), "C_{n} k={kk}");
                assert_eq!(sdiam(&k, kk).unwrap(), Dist::Finite(kk as u32 - 1));
                assert_eq!(steiner_ecc(&k, 0, kk).unwrap(), Dist::Finite(kk as u32 - 1));
            }
        }
        assert_eq!(sdiam(&Graph::cycle(6).unwrap(), 3).unwrap(), Dist::Finite(4));
    }

    #[test]
    fn eccentricity_examples() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(steiner_ecc(&p4, 0, 2).unwrap(), Dist::Finite(3));
        assert_eq!(steiner_ecc(&p4, 1, 2).unwrap(), Dist::Finite(2));
        assert_eq!(srad(&p4, 2).unwrap(), Dist::Finite(2));
        let c6 = Graph::cycle(6).unwrap();
        // Every 5-set of C_6 misses one vertex, leaving a path on 5 vertices.
        assert_eq!(steiner_ecc(&c6, 3, 5).unwrap(), Dist::Finite(4));
        assert!(matches!(
            steiner_ecc(&c6, 0, 7),
            Err(SteinerError::KOutOfRange { .. })
        ));
    }

    #[test]
    fn ecc_matches_subset_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(3..=7);
            let g = random_graph(&mut rng, n);
            for k in 2..=n {
                for v in 0..n {
                    let mut oracle = Dist::Finite(0);
                    for s in 0u64..(1 << n) {
                        let s = VertexSet(s);
                        if s.len() == k && s.contains(v) {
                            oracle = oracle.max(naive_steiner(&g, s));
                        }
                    }
                    assert_eq!(steiner_ecc(&g, v, k).unwrap(), oracle);
                }
            }
        }
    }

    #[test]
    fn wiener_and_average() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(steiner_wiener(&k3, 2).unwrap(), 3);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(avg_steiner_distance(&c4, 2).unwrap(), Ratio::new(4, 3));
        assert_eq!(avg_steiner_distance(&c4, 2).unwrap().to_string(), "4/3");
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(avg_steiner_distance(&k4, 2).unwrap(), Ratio::from_integer(1));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let n = rng.gen_range(2..=9);
            let g = random_graph(&mut rng, n);
            if !g.is_connected() {
                assert_eq!(steiner_wiener(&g, 2), Err(SteinerError::Disconnected));
                continue;
            }
            assert_eq!(steiner_wiener(&g, 1).unwrap(), 0);
            assert_eq!(steiner_wiener(&g, n).unwrap(), n as u128 - 1);
            assert_eq!(avg_steiner_distance(&g, n).unwrap(), Ratio::from_integer(n as u128 - 1));
            for k in 2..=n {
                let direct: u128 = KSubsets::new(n, k)
                    .map(|s| steiner_distance(&g, VertexSet(s)).unwrap().finite().unwrap() as u128)
                    .sum();
                assert_eq!(steiner_wiener(&g, k).unwrap(), direct);
            }
        }
    }

    #[test]
    fn profiles() {
        let c5 = steiner_profile(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!((c5.kappa, c5.cut_count), (2, Some(0)));
        let expect: BTreeMap<usize, Dist> =
            [(2, 2), (3, 3), (4, 3), (5, 4)].map(|(k, d)| (k, Dist::Finite(d))).into();
        assert_eq!(c5.sdiam, expect);

        let star = steiner_profile(&Graph::star(4).unwrap()).unwrap();
        assert_eq!((star.kappa, star.cut_count), (1, Some(1)));
        for k in 2..=4 {
            assert_eq!(star.sdiam[&k], Dist::Finite(k as u32));
        }
        assert_eq!(star.sdiam[&5], Dist::Finite(4));

        let k2 = Graph::complete(2).unwrap();
        let split = steiner_profile(&k2.disjoint_union(&k2).unwrap()).unwrap();
        assert_eq!((split.kappa, split.cut_count), (0, None));
        assert!(split.sdiam.values().all(|&d| d == Dist::Infinite));
        assert!(split.srad.values().all(|&d| d == Dist::Infinite));
        let json = serde_json::to_value(&split).unwrap();
        assert_eq!(json["sdiam"]["3"], "inf");
    }

    fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (3..=max_n, any::<u64>()).prop_filter_map("disconnected", |(n, seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(&mut rng, n);
            g.is_connected().then_some(g)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn sdiam_monotone_in_k(g in connected_graph(8)) {
            let n = g.order();
            let mut prev = Dist::Finite(0);
            for k in 2..=n {
                let d = sdiam(&g, k).unwrap();
                prop_assert!(prev <= d);
                prop_assert!(Dist::Finite(k as u32 - 1) <= d);
                prop_assert!(d <= Dist::Finite(n as u32 - 1));
                prop_assert!(srad(&g, k).unwrap() <= d);
                prev = d;
            }
            prop_assert_eq!(prev, Dist::Finite(n as u32 - 1));
        }

        #[test]
        fn adding_an_edge_never_increases_sdiam(g in connected_graph(8), pick in any::<u64>()) {
            let n = g.order();
            let missing: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            prop_assume!(!missing.is_empty());
            let (u, v) = missing[pick as usize % missing.len()];
            let h = g.with_edge(u, v).unwrap();
            for k in 2..=n {
                prop_assert!(sdiam(&h, k).unwrap() <= sdiam(&g, k).unwrap());
            }
        }
    }
}
