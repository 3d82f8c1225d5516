use std::io::{self, BufRead, BufReader};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Subcommand};
use serde_json::{json, Value};

use bipartite_turan::graph::members;
use bipartite_turan::graph::BipartiteGraph;
use bipartite_turan::search::{
    circumference, detect_jackson_config, find_path_on, is_long_cycle_free, jackson_bound, longest_path_vertices,
    Budget, PathWitness,
};
use bipartite_turan::structure::articulation_points;
use bipartite_turan::structure::{block_decomposition, connected_components, is_connected, is_two_connected};

use super::{Failure, RunOptions, EXIT_CHECK_FAILED};

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Size of the first color class; graph6 does not record the bipartition.
    #[arg(long)]
    pub a_size: usize,
    /// File with one graph6 string per line (default: stdin).
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[command(subcommand)]
    pub query: Query,
    #[command(flatten)]
    pub run: RunOptions,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Query {
    /// Connectivity, 2-connectivity, components and cut vertices.
    Connectivity,
    /// Blocks, cut vertices and block-cut tree edges (connected graphs only).
    Blocks,
    /// Length of a longest cycle with a witness.
    Circumference,
    /// Vertex count of a longest path with a witness.
    LongestPath,
    /// Whether no path on k vertices exists; fails when one does.
    PkFree {
        #[arg(long)]
        k: usize,
    },
    /// Whether no cycle of length >= 2l exists; fails when one does.
    Cfree {
        #[arg(long)]
        l: usize,
    },
    /// Cycle-length guarantee from a maximal path (default: a longest path).
    Jackson {
        /// Comma-separated vertex sequence of a maximal path.
        #[arg(long, value_delimiter = ',')]
        path: Option<Vec<usize>>,
    },
}

fn read_graphs(args: &CheckArgs) -> Result<Vec<BipartiteGraph>, Failure> {
    let reader: Box<dyn BufRead> = match &args.input {
        Some(path) => Box::new(BufReader::new(std::fs::File::open(path)?)),
        None => Box::new(io::stdin().lock()),
    };
    let mut graphs = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        graphs.push(BipartiteGraph::from_graph6(line.as_bytes(), args.a_size)?);
    }
    if graphs.is_empty() {
        return Err(Failure::invalid("no graph6 input"));
    }
    Ok(graphs)
}

/// One JSON report per graph, plus whether the query passed.
fn answer(g: &BipartiteGraph, query: &Query, budget: Budget) -> Result<(Value, bool), Failure> {
    let base = json!({ "graph6": g.to_graph6(), "a_size": g.a_size(), "edge_count": g.edge_count() });
    let (report, ok) = match query {
        Query::Connectivity => (
            json!({
                "connected": is_connected(g),
                "two_connected": is_two_connected(g),
                "components": connected_components(g).into_iter().map(|c| members(c).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "cut_vertices": members(articulation_points(g)).collect::<Vec<_>>(),
            }),
            true,
        ),
        Query::Blocks => {
            let blocks = block_decomposition(g).map_err(Failure::invalid)?;
            (serde_json::to_value(blocks).expect("serializable"), true)
        }
        Query::Circumference => {
            let (len, witness) = circumference(g, budget)?;
            (
                json!({ "circumference": len, "witness": witness.map(|w| w.vertices) }),
                true,
            )
        }
        Query::LongestPath => {
            let (len, witness) = longest_path_vertices(g, budget)?;
            (json!({ "longest_path": len, "witness": witness.vertices }), true)
        }
        Query::PkFree { k } => {
            let witness = find_path_on(g, *k, budget)?;
            let free = witness.is_none();
            (
                json!({ "k": k, "free": free, "witness": witness.map(|w| w.vertices) }),
                free,
            )
        }
        Query::Cfree { l } => {
            let free = is_long_cycle_free(g, *l, budget)?;
            (json!({ "l": l, "free": free }), free)
        }
        Query::Jackson { path } => {
            let path = match path {
                Some(vertices) => PathWitness::new(vertices.clone()),
                None => longest_path_vertices(g, budget)?.1,
            };
            let bound = jackson_bound(g, &path)?;
            let config = detect_jackson_config(g, &path)?;
            (
                json!({ "path": path.vertices, "m": path.m(), "bound": bound, "config": config }),
                true,
            )
        }
    };
    let mut merged = base;
    if let (Value::Object(target), Value::Object(extra)) = (&mut merged, report) {
        target.extend(extra);
    }
    Ok((merged, ok))
}

pub fn cmd_check(args: &CheckArgs) -> Result<ExitCode, Failure> {
    let graphs = read_graphs(args)?;
    let budget = Budget::new(args.run.budget()?);
    let mut all_ok = true;
    for g in &graphs {
        let (report, ok) = answer(g, &args.query, budget)?;
        println!("{report}");
        all_ok &= ok;
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    })
}
