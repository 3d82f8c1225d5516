mod check;
mod table;

use std::fmt;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bipartite_turan::constructions::{
    build_b1, build_b2, build_grs_extremal, enumerate_b1_family, ConstructionError, Parity, PendantLayout,
};
use bipartite_turan::formulas::{evaluate, Connectivity, ExtremalParams, Forbidden, FormulaError, Theorem};
use bipartite_turan::graph::{BipartiteGraph, Graph6Record, GraphError};
use bipartite_turan::oracle::{enumerate_extremal, OracleConfig, OracleError, DEFAULT_EDGE_BIT_CAP};
use bipartite_turan::search::SearchError;

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_GAP: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

const AFTER_HELP: &str = "\
Exit codes:
  0  every requested check or comparison succeeded
  1  a check or formula/oracle comparison failed
  2  invalid input or parameters outside a formula's range
  3  the cycle bound is undefined at a = 2l-1
  4  time budget exhausted

JSON goes to stdout, diagnostics to stderr.";

#[derive(Debug, Parser)]
#[command(
    name = "bipturan",
    version,
    about = "Bipartite Turán numbers for long paths and cycles",
    after_help = AFTER_HELP
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a closed-form extremal number; prints {params, value, theorem, branch}.
    Bound(BoundArgs),
    /// Build an extremal graph or family.
    Construct(ConstructArgs),
    /// Run exact queries on graphs read as graph6 lines (stdin or --input).
    Check(check::CheckArgs),
    /// Exhaustively enumerate spanning subgraphs of K_{a,b}; prints an OracleResult JSON.
    Oracle(OracleArgs),
    /// Compare formulas with the oracle over a grid of parameters.
    Table(table::TableArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RunOptions {
    /// Wall-clock budget in seconds for the whole command.
    #[arg(long, env = "BIPTURAN_BUDGET", default_value_t = 600.0)]
    pub budget: f64,
    /// Worker threads for the oracle (default: all cores).
    #[arg(long)]
    pub workers: Option<usize>,
    /// Maximum a*b the oracle will enumerate.
    #[arg(long, default_value_t = DEFAULT_EDGE_BIT_CAP)]
    pub cap: usize,
    /// Keep the two color classes distinct when a = b.
    #[arg(long)]
    pub no_class_swap: bool,
}

impl RunOptions {
    pub fn budget(&self) -> Result<Duration, Failure> {
        if !(self.budget > 0.0 && self.budget.is_finite()) {
            return Err(Failure::invalid(format!(
                "budget must be positive, got {}",
                self.budget
            )));
        }
        Ok(Duration::from_secs_f64(self.budget))
    }

    pub fn oracle_config(&self) -> Result<OracleConfig, Failure> {
        if self.workers == Some(0) {
            return Err(Failure::invalid("--workers must be at least 1"));
        }
        Ok(OracleConfig {
            edge_bit_cap: self.cap,
            workers: self.workers,
            allow_class_swap: !self.no_class_swap,
            budget: self.budget()?,
        })
    }
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(value_parser = parse_theorem)]
    pub theorem: Theorem,
    #[arg(long)]
    pub a: usize,
    #[arg(long)]
    pub b: usize,
    /// Half cycle length, or the path parameter of the unconstrained path bounds.
    #[arg(long, conflicts_with = "k")]
    pub l: Option<usize>,
    /// Number of path vertices (thm2).
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[allow(clippy::enum_variant_names)]
pub enum Family {
    #[value(name = "B2")]
    B2,
    #[value(name = "B1")]
    B1,
    #[value(name = "B1_family")]
    B1Family,
    #[value(name = "grs")]
    Grs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Dot,
    Json,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub family: Family,
    #[arg(long)]
    pub a: usize,
    #[arg(long)]
    pub b: usize,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Pendant counts per B-vertex for B1, e.g. 2,0,0,0.
    #[arg(long, value_delimiter = ',')]
    pub layout: Option<Vec<usize>>,
    /// Which unconstrained path bound grs follows: even forbids P_{2l+2}, odd P_{2l+3}.
    #[arg(long, value_parser = parse_parity, default_value = "even")]
    pub parity: Parity,
    /// graph6: one line per graph; dot: one DOT graph each; json: array of {a_size, b_size, edge_count, graph6}.
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    pub format: GraphFormat,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub a: usize,
    #[arg(long)]
    pub b: usize,
    /// P<k> (no path on k vertices) or Cge<2l> (no cycle of length >= 2l).
    #[arg(long, value_parser = parse_forbidden)]
    pub forbid: Forbidden,
    /// any, connected or two_connected.
    #[arg(long, value_parser = parse_connectivity, default_value = "any")]
    pub connectivity: Connectivity,
    #[command(flatten)]
    pub run: RunOptions,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse()
}

fn parse_parity(s: &str) -> Result<Parity, String> {
    s.parse()
}

fn parse_forbidden(s: &str) -> Result<Forbidden, String> {
    s.parse()
}

fn parse_connectivity(s: &str) -> Result<Connectivity, String> {
    s.parse()
}

/// An error message with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl fmt::Display) -> Self {
        Self {
            code: EXIT_INVALID,
            message: message.to_string(),
        }
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Self {
        Failure::invalid(e)
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        Failure::invalid(e)
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::invalid(e)
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        let code = match e {
            SearchError::BudgetExhausted => EXIT_BUDGET,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Search(inner) => inner.into(),
            other => Failure::invalid(other),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::invalid(e)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

pub fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Bound(args) => cmd_bound(&args),
        Command::Construct(args) => cmd_construct(&args),
        Command::Check(args) => check::cmd_check(&args),
        Command::Oracle(args) => cmd_oracle(&args),
        Command::Table(args) => table::cmd_table(&args),
    }
}

#[derive(Serialize)]
struct BoundParams {
    a: usize,
    b: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
}

#[derive(Serialize)]
struct BoundReport {
    params: BoundParams,
    value: Option<usize>,
    theorem: Theorem,
    branch: &'static str,
}

fn cmd_bound(args: &BoundArgs) -> Result<ExitCode, Failure> {
    let wants_k = args.theorem == Theorem::Thm2;
    let len = if wants_k { args.k } else { args.l }
        .ok_or_else(|| Failure::invalid(format!("{} needs --{}", args.theorem, args.theorem.length_name())))?;
    let evaluation = evaluate(args.theorem, args.a, args.b, len)?;
    let report = BoundReport {
        params: BoundParams {
            a: args.a,
            b: args.b,
            l: (!wants_k).then_some(len),
            k: wants_k.then_some(len),
        },
        value: evaluation.value,
        theorem: evaluation.theorem,
        branch: evaluation.branch,
    };
    println!("{}", to_json(&report));
    if evaluation.value.is_none() {
        eprintln!("{}", evaluation.branch);
        return Ok(ExitCode::from(EXIT_GAP));
    }
    Ok(ExitCode::SUCCESS)
}

fn require(value: Option<usize>, flag: &str, family: Family) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::invalid(format!("{family:?} needs --{flag}")))
}

fn cmd_construct(args: &ConstructArgs) -> Result<ExitCode, Failure> {
    let (a, b) = (args.a, args.b);
    let graphs = match args.family {
        Family::B2 => vec![build_b2(a, b, require(args.l, "l", args.family)?)?],
        Family::B1 => {
            let layout = args.layout.clone().map(PendantLayout::new);
            vec![build_b1(a, b, require(args.k, "k", args.family)?, layout.as_ref())?]
        }
        Family::B1Family => enumerate_b1_family(a, b, require(args.k, "k", args.family)?)?,
        Family::Grs => vec![build_grs_extremal(
            a,
            b,
            require(args.l, "l", args.family)?,
            args.parity,
        )?],
    };
    print_graphs(&graphs, args.format);
    Ok(ExitCode::SUCCESS)
}

pub fn print_graphs(graphs: &[BipartiteGraph], format: GraphFormat) {
    match format {
        GraphFormat::Graph6 => {
            for g in graphs {
                println!("{}", g.to_graph6());
            }
        }
        GraphFormat::Dot => {
            for g in graphs {
                print!("{}", g.to_dot());
            }
        }
        GraphFormat::Json => {
            let records: Vec<Graph6Record> = graphs.iter().map(Graph6Record::from).collect();
            println!("{}", to_json(&records));
        }
    }
}

fn cmd_oracle(args: &OracleArgs) -> Result<ExitCode, Failure> {
    let params = ExtremalParams::new(args.a, args.b, args.forbid, args.connectivity);
    let config = args.run.oracle_config()?;
    let result = enumerate_extremal(&params, &config)?;
    println!("{}", to_json(&result.report()));
    eprintln!(
        "scanned {} graphs in {:.2}s",
        result.graphs_scanned,
        result.elapsed.as_secs_f64()
    );
    Ok(ExitCode::SUCCESS)
}
