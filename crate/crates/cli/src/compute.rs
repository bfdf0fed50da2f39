use std::io::{self, Read, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, ValueEnum};
use steinerlab_core::graph::{connectivity, cut_vertices, from_graph6, parse_adjacency_lists};
use steinerlab_core::steiner::{avg_steiner_distance, sdiam, srad, steiner_profile, steiner_wiener};
use steinerlab_core::{Graph, SteinerError};

use crate::args::Offset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    Sdiam,
    Srad,
    Profile,
    Sw,
    Mu,
    Kappa,
    Cuts,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Adjlist,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Quantity to compute for each input graph.
    #[arg(long, value_enum)]
    what: What,
    /// Steiner order for sdiam, srad, sw and mu (`4`, `n-1`, ...).
    #[arg(long)]
    k: Option<Offset>,
    /// Input file; standard input when absent or `-`.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: InputFormat,
}

/// One record per graph. Returns the exit code: 0, or 2 if any input failed.
pub fn run(args: &ComputeArgs) -> Result<u8> {
    if matches!(args.what, What::Sdiam | What::Srad | What::Sw | What::Mu) && args.k.is_none() {
        return Err(crate::args::usage(format!("--what {:?} needs --k", args.what).to_lowercase()));
    }
    let mut text = String::new();
    match &args.input {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        }
        _ => {
            io::stdin().read_to_string(&mut text).context("reading standard input")?;
        }
    }
    let graphs: Vec<(usize, Result<Graph, String>)> = match args.format {
        InputFormat::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| (i + 1, from_graph6(l.trim()).map_err(|e| e.to_string())))
            .collect(),
        InputFormat::Adjlist => parse_adjacency_lists(&text)
            .into_iter()
            .enumerate()
            .map(|(i, g)| (i + 1, g.map_err(|e| e.to_string())))
            .collect(),
    };
    let unit = match args.format {
        InputFormat::Graph6 => "line",
        InputFormat::Adjlist => "graph",
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut code = 0;
    for (index, g) in graphs {
        let record = g.and_then(|g| evaluate(&g, args).map_err(|e| e.to_string()));
        match record {
            Ok(line) => writeln!(out, "{line}")?,
            Err(e) => {
                eprintln!("{unit} {index}: {e}");
                code = 2;
            }
        }
    }
    Ok(code)
}

fn evaluate(g: &Graph, args: &ComputeArgs) -> Result<String> {
    let k = args.k.map(|k| k.resolve(g.order())).transpose()?.unwrap_or(0);
    let infinite_if_disconnected = |r: Result<String, SteinerError>| match r {
        Err(SteinerError::Disconnected) => Ok("inf".to_string()),
        other => other,
    };
    Ok(match args.what {
        What::Sdiam => sdiam(g, k)?.to_string(),
        What::Srad => srad(g, k)?.to_string(),
        What::Sw => infinite_if_disconnected(steiner_wiener(g, k).map(|v| v.to_string()))?,
        What::Mu => infinite_if_disconnected(avg_steiner_distance(g, k).map(|v| v.to_string()))?,
        What::Profile => serde_json::to_string(&steiner_profile(g)?)?,
        What::Kappa => connectivity(g).to_string(),
        What::Cuts => match cut_vertices(g) {
            Ok(set) => serde_json::to_string(&set.iter().collect::<Vec<_>>())?,
            Err(_) => "null".to_string(),
        },
    })
}
