//! One pass over every labeled graph of a small order, answering all
//! `e_k(n, l, d)` queries for that order at once.

use std::time::Instant;

use rayon::prelude::*;

use super::enumerate::{check_order, masks_with_edges, Shard};
use super::{merge_smallest, millis, witness_strings, Extremal, ExtremalError, ExtremalQuery, ExtremalResult};
use crate::graph::{pair_count, Graph};
use crate::steiner::SteinerTable;

/// Largest order [`ExtremalTable::build`] accepts (`2^21` graphs at 7).
pub const TABLE_SEARCH_MAX_ORDER: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Entry {
    edges: usize,
    masks: Vec<u64>,
}

/// For each `(Δ, k, sdiam_k)` the fewest edges seen and the smallest masks
/// attaining it.
#[derive(Clone, Debug)]
pub struct ExtremalTable {
    n: usize,
    witness_cap: usize,
    entries: Vec<Option<Entry>>,
}

impl ExtremalTable {
    fn empty(n: usize, witness_cap: usize) -> Self {
        ExtremalTable {
            n,
            witness_cap,
            entries: vec![None; n * (n + 1) * n],
        }
    }

    fn index(&self, delta: usize, k: usize, v: usize) -> usize {
        (delta * (self.n + 1) + k) * self.n + v
    }

    fn offer(&mut self, delta: usize, k: usize, v: usize, edges: usize, masks: &[u64]) {
        let cap = self.witness_cap;
        let i = self.index(delta, k, v);
        match &mut self.entries[i] {
            Some(e) if e.edges < edges => {}
            Some(e) if e.edges == edges => merge_smallest(&mut e.masks, masks, cap),
            slot => {
                let mut kept = masks.to_vec();
                kept.sort_unstable();
                kept.truncate(cap);
                *slot = Some(Entry { edges, masks: kept });
            }
        }
    }

    fn build_shard(n: usize, witness_cap: usize, shard: Shard) -> Self {
        let mut out = ExtremalTable::empty(n, witness_cap);
        let mut table = SteinerTable::default();
        for m in n - 1..=pair_count(n) {
            for mask in masks_with_edges(n, m, shard) {
                let g = Graph::from_edge_mask(n, mask);
                if !g.is_connected() {
                    continue;
                }
                table.rebuild(&g);
                let delta = g.max_degree();
                for (k, v) in table.sdiam_all().into_iter().enumerate().skip(2) {
                    let v = v.finite().expect("connected") as usize;
                    out.offer(delta, k, v, m, &[mask]);
                }
            }
        }
        out
    }

    /// Scans all `2^C(n,2)` labeled graphs of order `n`, split into `shards`
    /// parallel pieces. The merged table does not depend on `shards`.
    pub fn build(n: usize, shards: usize, witness_cap: usize) -> Result<Self, ExtremalError> {
        check_order(n, TABLE_SEARCH_MAX_ORDER)?;
        if n < 2 {
            return Err(ExtremalError::UnsupportedOrder {
                n,
                max: TABLE_SEARCH_MAX_ORDER,
            });
        }
        let parts: Vec<ExtremalTable> = Shard::all(shards)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|s| ExtremalTable::build_shard(n, witness_cap, s))
            .collect();
        let mut merged = ExtremalTable::empty(n, witness_cap);
        for part in &parts {
            for delta in 0..n {
                for k in 2..=n {
                    for v in 0..n {
                        if let Some(e) = &part.entries[part.index(delta, k, v)] {
                            merged.offer(delta, k, v, e.edges, &e.masks);
                        }
                    }
                }
            }
        }
        Ok(merged)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Answers `q` from the table. `graphs_examined` is the full labeled
    /// space, since the table was built from all of it.
    pub fn lookup(&self, q: &ExtremalQuery, record_time: bool) -> Result<ExtremalResult, ExtremalError> {
        let start = Instant::now();
        if q.n != self.n {
            return Err(ExtremalError::InvalidQuery(format!(
                "table holds order {}, query has n={}",
                self.n, q.n
            )));
        }
        q.validate()?;
        let mut best: Option<usize> = None;
        let mut masks = Vec::new();
        for delta in (0..self.n).filter(|&delta| q.semantics.admits(delta, q.l)) {
            for v in 0..=q.d {
                let Some(e) = &self.entries[self.index(delta, q.k, v)] else {
                    continue;
                };
                match best {
                    Some(b) if b < e.edges => {}
                    Some(b) if b == e.edges => merge_smallest(&mut masks, &e.masks, self.witness_cap),
                    _ => {
                        best = Some(e.edges);
                        masks.clear();
                        merge_smallest(&mut masks, &e.masks, self.witness_cap);
                    }
                }
            }
        }
        Ok(ExtremalResult {
            query: *q,
            value: best.map_or(Extremal::Infeasible, Extremal::Value),
            witnesses: witness_strings(self.n, &masks),
            graphs_examined: 1u64 << pair_count(self.n),
            elapsed_ms: record_time.then(|| millis(start.elapsed())),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::{e_k_exact, DegreeSemantics, SearchOptions};
    use super::*;

    #[test]
    fn agrees_with_direct_search() {
        for n in 3..=6 {
            let table = ExtremalTable::build(n, 3, 16).unwrap();
            for k in 2..=n {
                for d in k - 1..n {
                    for l in 2..n {
                        for semantics in [DegreeSemantics::Exactly, DegreeSemantics::AtMost] {
                            let q = ExtremalQuery::new(n, l, d, k).with_semantics(semantics);
                            let a = table.lookup(&q, false).unwrap();
                            let b = e_k_exact(&q, &SearchOptions::default()).unwrap();
                            assert_eq!(a.value, b.value, "{q:?}");
                            assert_eq!(a.witnesses, b.witnesses, "{q:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shard_count_is_invisible() {
        let a = ExtremalTable::build(5, 1, 4).unwrap();
        let b = ExtremalTable::build(5, 7, 4).unwrap();
        assert_eq!(a.entries, b.entries);
    }

    #[test]
    fn rejects_large_or_mismatched_orders() {
        assert!(ExtremalTable::build(8, 1, 16).is_err());
        let t = ExtremalTable::build(4, 1, 16).unwrap();
        assert!(t.lookup(&ExtremalQuery::new(5, 2, 4, 3), false).is_err());
    }
}
