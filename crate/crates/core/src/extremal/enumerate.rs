//! Labeled graph enumeration over edge masks.
//!
//! A graph on `n` vertices is an edge mask over the `C(n,2)` pairs in graph6
//! order. Masks come in ascending popcount, then ascending numeric value.
//! Shards split the space by the low [`PREFIX_BITS`] bits of the mask.

use super::ExtremalError;
use crate::graph::{pair_count, Graph};
use crate::subsets::KSubsets;

/// Largest order the enumerator accepts.
pub const ENUMERATION_MAX_ORDER: usize = 8;

/// Number of low mask bits that select a shard.
pub const PREFIX_BITS: usize = 12;

/// A slice of the edge-mask space: prefixes `p` with `p % shards == shard`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn all(count: usize) -> impl Iterator<Item = Shard> {
        let count = count.max(1);
        (0..count).map(move |index| Shard { index, count })
    }
}

pub(crate) fn check_order(n: usize, max: usize) -> Result<(), ExtremalError> {
    if n == 0 || n > max.min(ENUMERATION_MAX_ORDER) {
        return Err(ExtremalError::UnsupportedOrder {
            n,
            max: max.min(ENUMERATION_MAX_ORDER),
        });
    }
    Ok(())
}

/// Masks of exactly `m` edges on order `n` that fall in `shard`.
///
/// Within a shard the order is by prefix, then by the remaining high bits;
/// callers that need a global order sort what they keep.
pub fn masks_with_edges(n: usize, m: usize, shard: Shard) -> impl Iterator<Item = u64> {
    let e = pair_count(n);
    let p = PREFIX_BITS.min(e);
    let high = e - p;
    (0u64..1 << p)
        .filter(move |&prefix| prefix as usize % shard.count == shard.index)
        .filter(move |&prefix| {
            let used = prefix.count_ones() as usize;
            used <= m && m - used <= high
        })
        .flat_map(move |prefix| {
            let rest = m - prefix.count_ones() as usize;
            KSubsets::new(high, rest).map(move |h| prefix | h << p)
        })
}

/// Every labeled graph on `n` vertices with `Δ <= max_deg_cap` and at most
/// `edge_budget` edges, each exactly once, restricted to `shard`.
pub fn enumerate_shard(
    n: usize,
    max_deg_cap: usize,
    edge_budget: usize,
    shard: Shard,
) -> Result<impl Iterator<Item = Graph>, ExtremalError> {
    check_order(n, ENUMERATION_MAX_ORDER)?;
    let e = pair_count(n);
    if edge_budget > e {
        return Err(ExtremalError::InvalidQuery(format!(
            "edge budget {edge_budget} exceeds C({n},2) = {e}"
        )));
    }
    Ok((0..=edge_budget)
        .flat_map(move |m| masks_with_edges(n, m, shard))
        .map(move |mask| Graph::from_edge_mask(n, mask))
        .filter(move |g| g.max_degree() <= max_deg_cap))
}

/// [`enumerate_shard`] over the whole space, in ascending popcount then
/// ascending mask order.
pub fn enumerate_graphs(
    n: usize,
    max_deg_cap: usize,
    edge_budget: usize,
) -> Result<impl Iterator<Item = Graph>, ExtremalError> {
    check_order(n, ENUMERATION_MAX_ORDER)?;
    let e = pair_count(n);
    if edge_budget > e {
        return Err(ExtremalError::InvalidQuery(format!(
            "edge budget {edge_budget} exceeds C({n},2) = {e}"
        )));
    }
    Ok((0..=edge_budget)
        .flat_map(move |m| KSubsets::new(e, m))
        .map(move |mask| Graph::from_edge_mask(n, mask))
        .filter(move |g| g.max_degree() <= max_deg_cap))
}
