//! Exact values of `e_k(n, l, d)`, the minimum size of a graph of order `n`
//! with maximum degree `l` and `sdiam_k <= d`, by exhaustive search; closed
//! forms for the known results; and reconciliation between the two.

mod enumerate;
mod sweep;
mod table;
mod theorems;
mod verify;

pub use enumerate::{enumerate_graphs, enumerate_shard, masks_with_edges, Shard, ENUMERATION_MAX_ORDER, PREFIX_BITS};
pub use sweep::{characterization_sweep, Counterexample, LemmaSummary, SweepReport, SWEEP_MAX_ORDER};
pub use table::{ExtremalTable, TABLE_SEARCH_MAX_ORDER};
pub use theorems::{closed_form, fan_chain_s, grid, ClosedForm, Expected, HypothesisViolation, Params, TheoremId};
pub use verify::{verify_theorem, verify_theorems, Got, ReportParams, TheoremReport, Verdict, VerifyOptions, CSV_HEADER};

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{pair_count, to_graph6, Graph, VertexSet};
use crate::steiner::{Dist, SteinerTable};
use crate::subsets::KSubsets;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("order {n} is outside the supported range 1..={max}")]
    UnsupportedOrder { n: usize, max: usize },
    #[error("invalid query: {0}")]
    InvalidQuery(String),
}

/// How the degree parameter constrains `Δ(G)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeSemantics {
    /// `Δ(G) = l`.
    #[default]
    Exactly,
    /// `Δ(G) <= l`.
    AtMost,
}

impl DegreeSemantics {
    pub fn admits(self, max_degree: usize, l: usize) -> bool {
        match self {
            DegreeSemantics::Exactly => max_degree == l,
            DegreeSemantics::AtMost => max_degree <= l,
        }
    }
}

impl fmt::Display for DegreeSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeSemantics::Exactly => "exactly",
            DegreeSemantics::AtMost => "at-most",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalQuery {
    pub n: usize,
    pub l: usize,
    pub d: usize,
    pub k: usize,
    pub semantics: DegreeSemantics,
}

impl ExtremalQuery {
    pub fn new(n: usize, l: usize, d: usize, k: usize) -> Self {
        ExtremalQuery {
            n,
            l,
            d,
            k,
            semantics: DegreeSemantics::Exactly,
        }
    }

    pub fn with_semantics(mut self, semantics: DegreeSemantics) -> Self {
        self.semantics = semantics;
        self
    }

    /// Checks `2 <= k <= n`, `d <= n-1` and `2 <= l <= n-1`. A bound
    /// `d < k-1` is accepted; no graph meets it, so the answer is infeasible.
    pub fn validate(&self) -> Result<(), ExtremalError> {
        let ExtremalQuery { n, l, d, k, .. } = *self;
        let bad = |what: String| Err(ExtremalError::InvalidQuery(what));
        if !(2..=n).contains(&k) {
            return bad(format!("k={k} must satisfy 2 <= k <= n={n}"));
        }
        if d + 1 > n {
            return bad(format!("d={d} must satisfy d <= n-1 (n={n})"));
        }
        if l < 2 || l + 1 > n {
            return bad(format!("l={l} must satisfy 2 <= l <= n-1 (n={n})"));
        }
        Ok(())
    }
}

fn sdiam_at_most(table: &SteinerTable, k: usize, d: usize) -> bool {
    let n = table.order();
    KSubsets::new(n, k).all(|s| table.distance(VertexSet(s)) <= Dist::Finite(d as u32))
}

/// `e_k(n, l, d)` or `∞` when no graph qualifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Extremal {
    Value(usize),
    Infeasible,
}

impl Extremal {
    pub fn value(self) -> Option<usize> {
        match self {
            Extremal::Value(v) => Some(v),
            Extremal::Infeasible => None,
        }
    }
}

impl fmt::Display for Extremal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extremal::Value(v) => write!(f, "{v}"),
            Extremal::Infeasible => f.write_str("infeasible"),
        }
    }
}

impl Serialize for Extremal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extremal::Value(v) => s.serialize_u64(*v as u64),
            Extremal::Infeasible => s.serialize_str("infeasible"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    #[serde(flatten)]
    pub query: ExtremalQuery,
    pub value: Extremal,
    /// Graph6 strings of the smallest witness masks, in mask order.
    pub witnesses: Vec<String>,
    pub graphs_examined: u64,
    /// Wall time, only filled when requested so output stays reproducible.
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest order searched; at most [`ENUMERATION_MAX_ORDER`].
    pub max_order: usize,
    pub shards: usize,
    pub witness_cap: usize,
    pub record_time: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_order: ENUMERATION_MAX_ORDER,
            shards: 1,
            witness_cap: 16,
            record_time: false,
        }
    }
}

/// Keeps the `cap` smallest values of the union, sorted.
pub(crate) fn merge_smallest(into: &mut Vec<u64>, from: &[u64], cap: usize) {
    into.extend_from_slice(from);
    into.sort_unstable();
    into.dedup();
    into.truncate(cap);
}

pub(crate) fn witness_strings(n: usize, masks: &[u64]) -> Vec<String> {
    masks
        .iter()
        .map(|&m| to_graph6(&Graph::from_edge_mask(n, m)).expect("small order"))
        .collect()
}

struct ShardOutcome {
    examined: u64,
    witnesses: Vec<u64>,
    found: bool,
}

fn search_shard(q: &ExtremalQuery, m: usize, shard: Shard, cap: usize) -> ShardOutcome {
    let mut table = SteinerTable::default();
    let mut out = ShardOutcome {
        examined: 0,
        witnesses: Vec::new(),
        found: false,
    };
    for mask in masks_with_edges(q.n, m, shard) {
        out.examined += 1;
        let g = Graph::from_edge_mask(q.n, mask);
        if !q.semantics.admits(g.max_degree(), q.l) || !g.is_connected() {
            continue;
        }
        table.rebuild(&g);
        if sdiam_at_most(&table, q.k, q.d) {
            out.found = true;
            if out.witnesses.len() < cap || cap > 0 && mask < *out.witnesses.last().expect("nonempty") {
                let at = out.witnesses.partition_point(|&w| w < mask);
                out.witnesses.insert(at, mask);
                out.witnesses.truncate(cap);
            }
        }
    }
    out
}

/// Exact `e_k(n, l, d)` by exhaustive search over labeled graphs.
///
/// Edge counts are tried in ascending order from `n-1` (a graph with finite
/// `sdiam_k` is connected) and the search stops at the first count where some
/// graph qualifies. Each count is split into `opts.shards` independent shards
/// run in parallel; the merge keeps the smallest witness masks, so the result
/// does not depend on the shard count.
pub fn e_k_exact(q: &ExtremalQuery, opts: &SearchOptions) -> Result<ExtremalResult, ExtremalError> {
    enumerate::check_order(q.n, opts.max_order)?;
    q.validate()?;
    let start = Instant::now();
    let shards: Vec<Shard> = Shard::all(opts.shards).collect();
    let mut examined = 0u64;
    let mut value = Extremal::Infeasible;
    let mut witnesses = Vec::new();
    for m in q.n - 1..=pair_count(q.n) {
        let outcomes: Vec<ShardOutcome> = shards
            .par_iter()
            .map(|&shard| search_shard(q, m, shard, opts.witness_cap))
            .collect();
        for o in &outcomes {
            examined += o.examined;
            merge_smallest(&mut witnesses, &o.witnesses, opts.witness_cap);
        }
        if outcomes.iter().any(|o| o.found) {
            value = Extremal::Value(m);
            break;
        }
    }
    Ok(ExtremalResult {
        query: *q,
        value,
        witnesses: witness_strings(q.n, &witnesses),
        graphs_examined: examined,
        elapsed_ms: opts.record_time.then(|| millis(start.elapsed())),
    })
}

pub(crate) fn millis(d: Duration) -> u64 {
    d.as_millis().min(u64::MAX as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::from_graph6;
    use crate::steiner::sdiam;

    fn exact(n: usize, l: usize, d: usize, k: usize) -> Extremal {
        e_k_exact(&ExtremalQuery::new(n, l, d, k), &SearchOptions::default())
            .unwrap()
            .value
    }

    #[test]
    fn known_values() {
        assert_eq!(exact(6, 3, 4, 5), Extremal::Value(7));
        assert_eq!(exact(6, 4, 4, 4), Extremal::Value(6));
        assert_eq!(exact(6, 5, 4, 4), Extremal::Value(5));
        assert_eq!(exact(7, 3, 5, 4), Extremal::Value(7));
        for l in 2..6 {
            for k in 3..=6 {
                assert_eq!(exact(6, l, 5, k), Extremal::Value(5), "l={l} k={k}");
            }
        }
    }

    #[test]
    fn diameter_below_k_minus_one_is_infeasible() {
        let r = e_k_exact(&ExtremalQuery::new(5, 2, 2, 4), &SearchOptions::default()).unwrap();
        assert_eq!(r.value, Extremal::Infeasible);
    }

    #[test]
    fn infeasible_is_explicit() {
        // A graph of order 4 with sdiam_2 <= 1 is K_4, so Δ = 2 is impossible.
        let r = e_k_exact(&ExtremalQuery::new(4, 2, 1, 2), &SearchOptions::default()).unwrap();
        assert_eq!(r.value, Extremal::Infeasible);
        assert!(r.witnesses.is_empty());
        assert_eq!(r.graphs_examined, (3..=6).map(|m| crate::binomial(6, m) as u64).sum::<u64>());
        assert_eq!(serde_json::to_value(&r).unwrap()["value"], "infeasible");
    }

    #[test]
    fn witnesses_are_reverified() {
        for (n, l, d, k) in [(5, 2, 3, 4), (6, 3, 4, 4), (6, 4, 3, 4), (5, 3, 2, 3)] {
            for semantics in [DegreeSemantics::Exactly, DegreeSemantics::AtMost] {
                let q = ExtremalQuery::new(n, l, d, k).with_semantics(semantics);
                let r = e_k_exact(&q, &SearchOptions::default()).unwrap();
                for w in &r.witnesses {
                    let g = from_graph6(w).unwrap();
                    assert_eq!(Some(g.edge_count()), r.value.value());
                    assert!(semantics.admits(g.max_degree(), l));
                    assert!(sdiam(&g, k).unwrap() <= Dist::Finite(d as u32));
                }
                let mut sorted = r.witnesses.clone();
                sorted.sort_by_key(|w| from_graph6(w).unwrap().edge_mask());
                assert_eq!(sorted, r.witnesses);
            }
        }
    }

    #[test]
    fn shard_count_does_not_change_the_result() {
        let q = ExtremalQuery::new(6, 3, 3, 4);
        let base = e_k_exact(&q, &SearchOptions::default()).unwrap();
        for shards in [2, 5, 8, 64] {
            let opts = SearchOptions {
                shards,
                ..SearchOptions::default()
            };
            assert_eq!(e_k_exact(&q, &opts).unwrap(), base);
        }
        let capped = e_k_exact(
            &q,
            &SearchOptions {
                witness_cap: 2,
                shards: 3,
                ..SearchOptions::default()
            },
        )
        .unwrap();
        assert_eq!(capped.witnesses, base.witnesses[..2]);
    }

    #[test]
    fn monotone_under_at_most() {
        let opts = SearchOptions::default();
        for n in 4..=6 {
            for k in 2..=n {
                for l in 2..n {
                    let mut prev = Extremal::Infeasible;
                    for d in k - 1..n {
                        let q = ExtremalQuery::new(n, l, d, k).with_semantics(DegreeSemantics::AtMost);
                        let v = e_k_exact(&q, &opts).unwrap().value;
                        assert!(v <= prev, "d monotonicity at n={n} k={k} l={l} d={d}");
                        prev = v;
                    }
                }
                for d in k - 1..n {
                    let mut prev = Extremal::Infeasible;
                    for l in 2..n {
                        let q = ExtremalQuery::new(n, l, d, k).with_semantics(DegreeSemantics::AtMost);
                        let v = e_k_exact(&q, &opts).unwrap().value;
                        assert!(v <= prev, "l monotonicity at n={n} k={k} d={d} l={l}");
                        prev = v;
                    }
                }
            }
        }
    }

    #[test]
    fn never_skips_an_edge_count() {
        // Independent scan: the minimum over all masks, not just the first hit.
        let n = 5;
        for k in 2..=n {
            for d in k - 1..n {
                for l in 2..n {
                    let mut best = None;
                    for mask in 0u64..1 << pair_count(n) {
                        let g = Graph::from_edge_mask(n, mask);
                        if g.max_degree() == l && sdiam(&g, k).unwrap() <= Dist::Finite(d as u32) {
                            let e = g.edge_count();
                            best = Some(best.map_or(e, |b: usize| b.min(e)));
                        }
                    }
                    let want = best.map_or(Extremal::Infeasible, Extremal::Value);
                    assert_eq!(exact(n, l, d, k), want, "k={k} d={d} l={l}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_queries() {
        let opts = SearchOptions::default();
        assert!(matches!(
            e_k_exact(&ExtremalQuery::new(9, 3, 5, 4), &opts),
            Err(ExtremalError::UnsupportedOrder { .. })
        ));
        let capped = SearchOptions { max_order: 6, ..opts };
        assert!(e_k_exact(&ExtremalQuery::new(7, 3, 5, 4), &capped).is_err());
        for (n, l, d, k) in [(6, 1, 4, 4), (6, 6, 4, 4), (6, 3, 6, 4), (6, 3, 4, 7), (6, 3, 4, 1)] {
            assert!(matches!(
                e_k_exact(&ExtremalQuery::new(n, l, d, k), &opts),
                Err(ExtremalError::InvalidQuery(_))
            ));
        }
    }
}
