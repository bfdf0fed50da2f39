use std::io::{self, Write};

use anyhow::Result;
use clap::{Args, ValueEnum};
use steinerlab_core::extremal::{
    characterization_sweep, verify_theorems, ExtremalError, TheoremId, Verdict, VerifyOptions, CSV_HEADER,
    SWEEP_MAX_ORDER, TABLE_SEARCH_MAX_ORDER,
};

use crate::args::{usage, OrderRange};
use crate::search::semantics;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated theorem ids, `all`, or `characterizations`.
    #[arg(long)]
    theorems: String,
    /// Orders to check, e.g. `6` or `5..7`.
    #[arg(long)]
    n: OrderRange,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    /// Require Δ <= l instead of Δ = l.
    #[arg(long)]
    at_most: bool,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    #[arg(long, default_value_t = 16)]
    witness_cap: usize,
    /// Largest order searched by brute force; larger orders are skipped.
    #[arg(long, default_value_t = TABLE_SEARCH_MAX_ORDER)]
    max_order: usize,
    /// Record wall time in `elapsed_ms`.
    #[arg(long)]
    timings: bool,
}

struct Selection {
    theorems: Vec<TheoremId>,
    characterizations: bool,
}

fn select(list: &str) -> Result<Selection> {
    let mut sel = Selection {
        theorems: Vec::new(),
        characterizations: false,
    };
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match token {
            "all" => sel.theorems.extend(TheoremId::ALL),
            "characterizations" => sel.characterizations = true,
            id => sel.theorems.push(id.parse().map_err(usage)?),
        }
    }
    let mut seen = Vec::new();
    sel.theorems.retain(|id| {
        let fresh = !seen.contains(id);
        seen.push(*id);
        fresh
    });
    if sel.theorems.is_empty() && !sel.characterizations {
        return Err(usage("no theorems selected"));
    }
    Ok(sel)
}

/// Exit code 1 when any report is a violation or any characterization has a
/// counterexample.
pub fn run(args: &VerifyArgs) -> Result<u8> {
    let sel = select(&args.theorems)?;
    if sel.characterizations && args.n.hi > SWEEP_MAX_ORDER {
        return Err(ExtremalError::UnsupportedOrder {
            n: args.n.hi,
            max: SWEEP_MAX_ORDER,
        }
        .into());
    }
    if args.format == ReportFormat::Csv && sel.characterizations && !sel.theorems.is_empty() {
        return Err(usage("csv output takes theorems or characterizations, not both"));
    }
    let opts = VerifyOptions {
        semantics: semantics(args.at_most),
        shards: args.shards.max(1),
        witness_cap: args.witness_cap,
        max_order: args.max_order,
        record_time: args.timings,
    };
    let orders = args.n.orders();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut failed = false;

    let reports = verify_theorems(&sel.theorems, &orders, &opts);
    failed |= reports.iter().any(|r| r.verdict == Verdict::Violation);
    match args.format {
        ReportFormat::Json => {
            for r in &reports {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        ReportFormat::Csv if !reports.is_empty() => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(CSV_HEADER)?;
            for r in &reports {
                w.write_record(r.csv_record())?;
            }
            w.flush()?;
        }
        ReportFormat::Csv => {}
    }

    if sel.characterizations {
        let mut w = (args.format == ReportFormat::Csv).then(|| csv::Writer::from_writer(io::stdout()));
        if let Some(w) = &mut w {
            w.write_record(["n", "lemma", "applicable", "checks", "counterexample_count", "counterexamples"])?;
        }
        for n in orders {
            let report = characterization_sweep(n, opts.shards)?;
            failed |= report.counterexample_total() > 0;
            match &mut w {
                None => writeln!(out, "{}", serde_json::to_string(&report)?)?,
                Some(w) => {
                    for l in &report.lemmas {
                        let examples: Vec<String> =
                            l.counterexamples.iter().map(|c| format!("{} ({})", c.graph6, c.clause)).collect();
                        w.write_record([
                            n.to_string(),
                            l.lemma.to_string(),
                            l.applicable.to_string(),
                            l.checks.to_string(),
                            l.counterexample_count.to_string(),
                            examples.join("; "),
                        ])?;
                    }
                }
            }
        }
        if let Some(w) = &mut w {
            w.flush()?;
        }
    }
    Ok(u8::from(failed))
}
