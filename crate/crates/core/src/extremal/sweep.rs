//! Exhaustive check of the structural characterizations of large `sdiam_k`
//! values over every connected labeled graph of a given order.
//!
//! The Steiner side comes from [`SteinerTable`]; the structural side from
//! max-flow connectivity and cut-vertex detection, so the two share no code.

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{masks_with_edges, Shard};
use super::ExtremalError;
use crate::graph::{connectivity, cut_vertices, pair_count, to_graph6, Graph};
use crate::steiner::{Dist, SteinerTable};

/// Largest order the sweep accepts.
pub const SWEEP_MAX_ORDER: usize = 7;

const LEMMAS: [&str; 4] = ["Lem3.1", "Lem4.1", "Lem4.2", "Lem5.1"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub clause: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaSummary {
    pub lemma: &'static str,
    /// False when the order is outside the lemma's hypotheses.
    pub applicable: bool,
    /// Number of (graph, clause) biconditionals checked.
    pub checks: u64,
    pub counterexample_count: u64,
    /// The first few counterexamples in mask order.
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub connected_graphs: u64,
    pub lemmas: Vec<LemmaSummary>,
}

impl SweepReport {
    pub fn counterexample_total(&self) -> u64 {
        self.lemmas.iter().map(|l| l.counterexample_count).sum()
    }
}

struct Tally {
    graphs: u64,
    checks: [u64; 4],
    bad: [u64; 4],
    // (mask, clause) pairs, kept sorted and capped.
    examples: [Vec<(u64, String)>; 4],
}

const EXAMPLE_CAP: usize = 16;

impl Tally {
    fn new() -> Self {
        Tally {
            graphs: 0,
            checks: [0; 4],
            bad: [0; 4],
            examples: Default::default(),
        }
    }

    fn record(&mut self, lemma: usize, mask: u64, clause: impl FnOnce() -> String, holds: bool) {
        self.checks[lemma] += 1;
        if !holds {
            self.bad[lemma] += 1;
            if self.examples[lemma].len() < EXAMPLE_CAP {
                self.examples[lemma].push((mask, clause()));
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.graphs += other.graphs;
        for i in 0..4 {
            self.checks[i] += other.checks[i];
            self.bad[i] += other.bad[i];
            self.examples[i].extend(other.examples[i].iter().cloned());
            self.examples[i].sort();
            self.examples[i].truncate(EXAMPLE_CAP);
        }
    }
}

fn check_graph(n: usize, mask: u64, table: &mut SteinerTable, tally: &mut Tally) {
    let g = Graph::from_edge_mask(n, mask);
    if !g.is_connected() {
        return;
    }
    tally.graphs += 1;
    table.rebuild(&g);
    let sd = table.sdiam_all();
    let is = |k: usize, v: usize| sd[k] == Dist::Finite(v as u32);
    let kappa = connectivity(&g);
    let cuts = cut_vertices(&g).expect("connected").len();

    if n >= 5 {
        let k = n - 2;
        tally.record(0, mask, || "sdiam_{n-2} = n-3 iff kappa >= 3".into(), is(k, n - 3) == (kappa >= 3));
        tally.record(
            0,
            mask,
            || "sdiam_{n-2} = n-2 iff kappa = 2 or one cut vertex".into(),
            is(k, n - 2) == (kappa == 2 || cuts == 1),
        );
        tally.record(0, mask, || "sdiam_{n-2} = n-1 iff >= 2 cut vertices".into(), is(k, n - 1) == (cuts >= 2));

        let k = n - 3;
        tally.record(1, mask, || "sdiam_{n-3} = n-4 iff kappa >= 4".into(), is(k, n - 4) == (kappa >= 4));
        tally.record(1, mask, || "sdiam_{n-3} = n-1 iff >= 3 cut vertices".into(), is(k, n - 1) == (cuts >= 3));
    }
    for k in 3..n {
        tally.record(
            2,
            mask,
            || format!("sdiam_{k} = n-1 iff at most {k} non-cut vertices"),
            is(k, n - 1) == (n - cuts <= k),
        );
    }
    for l in 1..=n.saturating_sub(2) {
        tally.record(
            3,
            mask,
            || format!("kappa >= {l} iff sdiam_{} = {}", n - l + 1, n - l),
            (kappa >= l) == is(n - l + 1, n - l),
        );
    }
}

/// Checks every clause of the four characterizations on all connected
/// labeled graphs of order `n`, split into `shards` parallel pieces.
pub fn characterization_sweep(n: usize, shards: usize) -> Result<SweepReport, ExtremalError> {
    if !(1..=SWEEP_MAX_ORDER).contains(&n) {
        return Err(ExtremalError::UnsupportedOrder {
            n,
            max: SWEEP_MAX_ORDER,
        });
    }
    let tallies: Vec<Tally> = Shard::all(shards)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|shard| {
            let mut tally = Tally::new();
            let mut table = SteinerTable::default();
            for m in n.saturating_sub(1)..=pair_count(n) {
                for mask in masks_with_edges(n, m, shard) {
                    check_graph(n, mask, &mut table, &mut tally);
                }
            }
            tally
        })
        .collect();
    let mut total = Tally::new();
    for t in tallies {
        total.absorb(t);
    }
    let applicable = [n >= 5, n >= 5, n >= 4, n >= 3];
    let lemmas = (0..4)
        .map(|i| LemmaSummary {
            lemma: LEMMAS[i],
            applicable: applicable[i],
            checks: total.checks[i],
            counterexample_count: total.bad[i],
            counterexamples: total.examples[i]
                .iter()
                .map(|(mask, clause)| Counterexample {
                    graph6: to_graph6(&Graph::from_edge_mask(n, *mask)).expect("small order"),
                    clause: clause.clone(),
                })
                .collect(),
        })
        .collect();
    Ok(SweepReport {
        n,
        connected_graphs: total.graphs,
        lemmas,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_counterexamples_up_to_six() {
        // Connected labeled graphs: 1, 1, 4, 38, 728, 26704.
        let connected = [0, 1, 1, 4, 38, 728, 26704];
        for n in 1..=6 {
            let r = characterization_sweep(n, 3).unwrap();
            assert_eq!(r.connected_graphs, connected[n]);
            assert_eq!(r.counterexample_total(), 0, "{r:?}");
        }
    }

    #[test]
    fn shards_give_identical_reports() {
        assert_eq!(characterization_sweep(5, 1).unwrap(), characterization_sweep(5, 8).unwrap());
    }

    #[test]
    fn clause_counts() {
        let r = characterization_sweep(5, 1).unwrap();
        let checks: Vec<u64> = r.lemmas.iter().map(|l| l.checks).collect();
        assert_eq!(checks, [3 * 728, 2 * 728, 2 * 728, 3 * 728]);
        assert!(characterization_sweep(8, 1).is_err());
    }
}
