use std::io::{self, Write};

use anyhow::Result;
use clap::{Args, Subcommand, ValueEnum};
use serde_json::json;
use steinerlab_core::constructions::{verify_claims, ConstructionSpec, EdgeRange, DEFAULT_SDIAM_BUDGET};
use steinerlab_core::graph::{to_graph6, GRAPH6_MAX_ORDER};

use crate::args::Offset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Graph6,
    Adjlist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RangeArg {
    Corrected,
    Stated,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    family: Family,
    /// Graph output format; orders above 62 always use adjlist.
    #[arg(long, value_enum, default_value = "graph6", global = true)]
    format: OutputFormat,
    /// Skip re-measuring the claimed properties.
    #[arg(long, global = true)]
    no_verify: bool,
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Cycle C_{n-l+2} with a star K_{1,l-2} centered on one cycle vertex.
    CycleStar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: Offset,
    },
    /// Chain of fans; needs n = 4r + l + s + 3.
    FanChain {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: Offset,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Wheel W_n (rim of n-1 vertices plus a center).
    Wheel {
        #[arg(long)]
        n: usize,
    },
    /// Wheel with a modified rim, maximum degree n-variant.
    WheelMod {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        variant: usize,
    },
    /// Double star with adjacent centers of degree l and n-l.
    DoubleStar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: Offset,
    },
    /// The minimally 4-connected graph on 32 vertices.
    A32,
    /// Linked copies of a32 with K_4 blocks and stars for the remainder.
    A32Chain {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: Offset,
    },
    /// Wheel with a star identified at a rim vertex.
    WheelStar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: Offset,
    },
    /// Linked wheels W_{l+1} with a residue gadget.
    WheelChain {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: Offset,
    },
    /// K_{a,n-a} plus edges from one vertex to the rest of the smaller side.
    BipartitePlus {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        l: Offset,
        #[arg(long, value_enum, default_value = "corrected")]
        range: RangeArg,
    },
    /// Caterpillar tree with sdiam_k <= d and maximum degree l.
    BroomTree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Offset,
        #[arg(long)]
        d: Offset,
        #[arg(long)]
        l: Offset,
    },
}

impl Family {
    fn spec(&self) -> Result<ConstructionSpec> {
        Ok(match *self {
            Family::CycleStar { n, l } => ConstructionSpec::CycleStar { n, l: l.resolve(n)? },
            Family::FanChain { n, l, r, s } => ConstructionSpec::FanChain {
                n,
                l: l.resolve(n)?,
                r,
                s,
            },
            Family::Wheel { n } => ConstructionSpec::Wheel { n },
            Family::WheelMod { n, variant } => ConstructionSpec::WheelMod { n, variant },
            Family::DoubleStar { n, l } => ConstructionSpec::DoubleStar { n, l: l.resolve(n)? },
            Family::A32 => ConstructionSpec::A32,
            Family::A32Chain { n, l } => ConstructionSpec::A32Chain { n, l: l.resolve(n)? },
            Family::WheelStar { n, l } => ConstructionSpec::WheelStar { n, l: l.resolve(n)? },
            Family::WheelChain { n, l } => ConstructionSpec::WheelChain { n, l: l.resolve(n)? },
            Family::BipartitePlus { n, a, l, range } => ConstructionSpec::BipartitePlus {
                n,
                a,
                l: l.resolve(n)?,
                range: match range {
                    RangeArg::Corrected => EdgeRange::Corrected,
                    RangeArg::Stated => EdgeRange::Stated,
                },
            },
            Family::BroomTree { n, k, d, l } => ConstructionSpec::BroomTree {
                n,
                k: k.resolve(n)?,
                d: d.resolve(n)?,
                l: l.resolve(n)?,
            },
        })
    }
}

/// Prints the graph, then one JSON line with the spec, claims and the
/// re-measured report. Exit code 1 when a claim fails.
pub fn run(args: &ConstructArgs) -> Result<u8> {
    let spec = args.family.spec()?;
    let c = spec.build()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let n = c.graph.order();
    let as_graph6 = args.format == OutputFormat::Graph6 && n <= GRAPH6_MAX_ORDER;
    if args.format == OutputFormat::Graph6 && !as_graph6 {
        eprintln!("order {n} is above the graph6 limit {GRAPH6_MAX_ORDER}; writing adjlist");
    }
    if as_graph6 {
        writeln!(out, "{}", to_graph6(&c.to_graph()?)?)?;
    } else {
        write!(out, "{}", c.graph.to_adjacency_list())?;
    }
    let report = (!args.no_verify).then(|| verify_claims(&c, DEFAULT_SDIAM_BUDGET));
    let record = json!({
        "spec": c.spec,
        "claims": c.claims,
        "verification": report,
    });
    writeln!(out, "{}", serde_json::to_string(&record)?)?;
    match report {
        Some(r) if !r.all_hold() => {
            for f in r.failures() {
                eprintln!("claim {} fails: claimed {}, measured {}", f.property, f.claimed, f.measured);
            }
            Ok(1)
        }
        _ => Ok(0),
    }
}
