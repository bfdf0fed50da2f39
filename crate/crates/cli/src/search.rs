use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use steinerlab_core::extremal::{
    e_k_exact, ExtremalError, ExtremalTable, SearchOptions, ENUMERATION_MAX_ORDER, TABLE_SEARCH_MAX_ORDER,
};
use steinerlab_core::{DegreeSemantics, ExtremalQuery};

use crate::args::{usage, Offset, OrderRange};

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// Maximum degree (`3`, `n-1`, ...).
    #[arg(long)]
    l: Offset,
    /// Bound on sdiam_k.
    #[arg(long)]
    d: Offset,
    /// Steiner order.
    #[arg(long)]
    k: Offset,
    /// Require Δ <= l instead of Δ = l.
    #[arg(long)]
    at_most: bool,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    #[arg(long, default_value_t = 16)]
    witness_cap: usize,
    /// Largest order accepted.
    #[arg(long, default_value_t = ENUMERATION_MAX_ORDER)]
    max_order: usize,
    /// Also write the witnesses as graph6 lines to this file.
    #[arg(long)]
    witness_out: Option<PathBuf>,
    /// Record wall time in `elapsed_ms`.
    #[arg(long)]
    timings: bool,
}

pub(crate) fn semantics(at_most: bool) -> DegreeSemantics {
    if at_most {
        DegreeSemantics::AtMost
    } else {
        DegreeSemantics::Exactly
    }
}

pub fn run(args: &SearchArgs) -> Result<u8> {
    let n = args.n;
    let q = ExtremalQuery::new(n, args.l.resolve(n)?, args.d.resolve(n)?, args.k.resolve(n)?)
        .with_semantics(semantics(args.at_most));
    let opts = SearchOptions {
        max_order: args.max_order,
        shards: args.shards.max(1),
        witness_cap: args.witness_cap,
        record_time: args.timings,
    };
    let result = e_k_exact(&q, &opts)?;
    if let Some(path) = &args.witness_out {
        let mut text = result.witnesses.join("\n");
        if !text.is_empty() {
            text.push('\n');
        }
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    writeln!(io::stdout().lock(), "{}", serde_json::to_string(&result)?)?;
    Ok(0)
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Orders to tabulate, e.g. `6` or `4..7`.
    #[arg(long)]
    n: OrderRange,
    #[arg(long)]
    at_most: bool,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    #[arg(long, default_value_t = 16)]
    witness_cap: usize,
}

/// Every `e_k(n, l, d)` with `2 <= k <= n`, `k-1 <= d <= n-1`,
/// `2 <= l <= n-1`, one JSON line each, from one full pass per order.
pub fn sweep(args: &SweepArgs) -> Result<u8> {
    if args.n.lo < 3 {
        return Err(usage(format!("sweep needs n >= 3, got {}", args.n.lo)));
    }
    if args.n.hi > TABLE_SEARCH_MAX_ORDER {
        return Err(ExtremalError::UnsupportedOrder {
            n: args.n.hi,
            max: TABLE_SEARCH_MAX_ORDER,
        }
        .into());
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for n in args.n.orders() {
        let table = ExtremalTable::build(n, args.shards.max(1), args.witness_cap)?;
        for l in 2..n {
            for k in 2..=n {
                for d in k - 1..n {
                    let q = ExtremalQuery::new(n, l, d, k).with_semantics(semantics(args.at_most));
                    writeln!(out, "{}", serde_json::to_string(&table.lookup(&q, false)?)?)?;
                }
            }
        }
    }
    Ok(0)
}
