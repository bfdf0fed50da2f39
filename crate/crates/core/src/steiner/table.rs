//! Steiner distances of every vertex subset of a small graph at once.
//!
//! Mark each connected induced subgraph `T` with `|T| - 1`, then push minima
//! down from supersets to subsets one coordinate at a time; what remains at `S`
//! is the cheapest connected superset, i.e. `d_G(S)`.

use super::Dist;
use crate::graph::{Graph, VertexSet};

/// Largest order [`SteinerTable`] accepts (the table has `2^n` bytes).
pub const TABLE_MAX_ORDER: usize = 20;

const UNREACHABLE: u8 = u8::MAX;

#[derive(Clone, Debug, Default)]
pub struct SteinerTable {
    n: usize,
    d: Vec<u8>,
}

impl SteinerTable {
    /// Panics if the order exceeds [`TABLE_MAX_ORDER`].
    pub fn new(g: &Graph) -> Self {
        let mut t = SteinerTable::default();
        t.rebuild(g);
        t
    }

    /// Recomputes the table for `g`, reusing the allocation.
    pub fn rebuild(&mut self, g: &Graph) {
        let n = g.order();
        assert!(n <= TABLE_MAX_ORDER, "order {n} too large for a subset table");
        self.n = n;
        let size = 1usize << n;
        self.d.clear();
        self.d.resize(size, UNREACHABLE);
        for t in 1..size {
            let set = VertexSet(t as u64);
            if g.reach(set.first().expect("nonempty"), set) == set {
                self.d[t] = set.len() as u8 - 1;
            }
        }
        for i in 0..n {
            let bit = 1usize << i;
            for t in 0..size {
                if t & bit == 0 {
                    let up = self.d[t | bit];
                    if up < self.d[t] {
                        self.d[t] = up;
                    }
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn lookup(&self, t: usize) -> Dist {
        match self.d[t] {
            UNREACHABLE => Dist::Infinite,
            d => Dist::Finite(d as u32),
        }
    }

    /// `d_G(S)`; a single vertex gives 0.
    pub fn distance(&self, s: VertexSet) -> Dist {
        debug_assert!(!s.is_empty() && s.bits() >> self.n == 0);
        self.lookup(s.bits() as usize)
    }

    /// `sdiam_k` for every `k`, indexed by `k` (entries 0 and 1 are 0).
    pub fn sdiam_all(&self) -> Vec<Dist> {
        let mut out = vec![Dist::Finite(0); self.n + 1];
        for t in 1..self.d.len() {
            let k = t.count_ones() as usize;
            out[k] = out[k].max(self.lookup(t));
        }
        out
    }

    /// `srad_k` for every `k`, indexed by `k` (entries 0 and 1 are 0).
    pub fn srad_all(&self) -> Vec<Dist> {
        let n = self.n;
        let mut ecc = vec![Dist::Finite(0); (n + 1) * n];
        for t in 1..self.d.len() {
            let k = t.count_ones() as usize;
            let d = self.lookup(t);
            for v in VertexSet(t as u64) {
                let e = &mut ecc[k * n + v];
                *e = (*e).max(d);
            }
        }
        let mut out = vec![Dist::Finite(0); n + 1];
        for (k, slot) in out.iter_mut().enumerate().skip(2) {
            *slot = ecc[k * n..k * n + n].iter().copied().min().expect("n >= 2");
        }
        out
    }

    /// `e_k(v)`.
    pub fn ecc(&self, v: usize, k: usize) -> Dist {
        let mut worst = Dist::Finite(0);
        for t in 1..self.d.len() {
            if t >> v & 1 == 1 && t.count_ones() as usize == k {
                worst = worst.max(self.lookup(t));
            }
        }
        worst
    }

    /// `SW_k`. Panics on an infinite term; callers check connectivity first.
    pub fn wiener(&self, k: usize) -> u128 {
        (1..self.d.len())
            .filter(|t| t.count_ones() as usize == k)
            .map(|t| self.lookup(t).finite().expect("connected graph") as u128)
            .sum()
    }
}
