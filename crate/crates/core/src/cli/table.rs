use std::process::ExitCode;

use clap::{Args, ValueEnum};
use serde::Serialize;

use bipartite_turan::formulas::{
    jackson_cycle_bound, path_params_in_range, thm1_bound, Connectivity, ExtremalParams, Forbidden, Theorem,
};
use bipartite_turan::oracle::{compare_with_formula, ComparisonReport};

use super::{to_json, Failure, RunOptions, EXIT_CHECK_FAILED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Thm1,
    Thm2,
    Grs,
    Jackson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub suite: Suite,
    #[arg(long)]
    pub amax: usize,
    #[arg(long)]
    pub bmax: usize,
    /// Fix the length parameter (l, or k for thm2) instead of sweeping it.
    #[arg(long, alias = "k")]
    pub l: Option<usize>,
    /// csv: header plus one row per instance; json: array of row objects.
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
    #[command(flatten)]
    pub run: RunOptions,
}

#[derive(Debug, Serialize)]
struct Row {
    a: usize,
    b: usize,
    forbid: String,
    connectivity: String,
    theorem: Theorem,
    branch: &'static str,
    formula: Option<usize>,
    oracle: Option<usize>,
    #[serde(rename = "match")]
    matches: bool,
    classes: usize,
    predicted_classes: Option<usize>,
    classes_match: Option<bool>,
}

impl Row {
    fn ok(&self) -> bool {
        self.matches && self.classes_match != Some(false)
    }
}

impl From<ComparisonReport> for Row {
    fn from(r: ComparisonReport) -> Self {
        Row {
            a: r.params.a,
            b: r.params.b,
            forbid: r.params.family.to_string(),
            connectivity: r.params.connectivity.to_string(),
            theorem: r.theorem,
            branch: r.branch,
            formula: r.formula_value,
            oracle: r.oracle_value,
            matches: r.matches,
            classes: r.extremal_class_count,
            predicted_classes: r.predicted_class_count,
            classes_match: r.classes_match,
        }
    }
}

const HEADER: [&str; 12] = [
    "a",
    "b",
    "forbid",
    "connectivity",
    "theorem",
    "branch",
    "formula",
    "oracle",
    "match",
    "classes",
    "predicted_classes",
    "classes_match",
];

fn lengths(fixed: Option<usize>, sweep: impl Iterator<Item = usize>) -> Vec<usize> {
    match fixed {
        Some(l) => vec![l],
        None => sweep.collect(),
    }
}

/// All in-range instances of `suite` with `a <= amax`, `a <= b <= bmax`.
fn grid(suite: Suite, amax: usize, bmax: usize, fixed: Option<usize>) -> Vec<ExtremalParams> {
    let mut out = Vec::new();
    for a in 1..=amax {
        for b in a..=bmax {
            match suite {
                Suite::Thm1 => {
                    for l in lengths(fixed, 4..=a) {
                        if thm1_bound(a, b, l).is_ok() {
                            let family = Forbidden::LongCycles { half_length: l };
                            out.push(ExtremalParams::new(a, b, family, Connectivity::TwoConnected));
                        }
                    }
                }
                Suite::Thm2 => {
                    for k in lengths(fixed, 8..=2 * a + 1) {
                        if path_params_in_range(a, b, k) {
                            let family = Forbidden::Path { vertices: k };
                            out.push(ExtremalParams::new(a, b, family, Connectivity::Connected));
                        }
                    }
                }
                Suite::Grs => {
                    for l in lengths(fixed, 1..=3).into_iter().filter(|&l| l >= 1) {
                        for k in [2 * l + 2, 2 * l + 3] {
                            out.push(ExtremalParams::new(
                                a,
                                b,
                                Forbidden::Path { vertices: k },
                                Connectivity::Any,
                            ));
                        }
                    }
                }
                Suite::Jackson => {
                    for l in lengths(fixed, 2..=a + 1) {
                        if matches!(jackson_cycle_bound(a, b, l), Ok(Some(_))) {
                            let family = Forbidden::LongCycles { half_length: l };
                            out.push(ExtremalParams::new(a, b, family, Connectivity::Any));
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn cmd_table(args: &TableArgs) -> Result<ExitCode, Failure> {
    let config = args.run.oracle_config()?;
    let (instances, skipped): (Vec<_>, Vec<_>) = grid(args.suite, args.amax, args.bmax, args.l)
        .into_iter()
        .partition(|p| p.a * p.b <= config.edge_bit_cap);
    if !skipped.is_empty() {
        eprintln!(
            "skipped {} instances with a*b above the cap of {}",
            skipped.len(),
            config.edge_bit_cap
        );
    }
    let mut rows = Vec::with_capacity(instances.len());
    for params in &instances {
        rows.push(Row::from(compare_with_formula(params, &config)?));
    }

    match args.format {
        TableFormat::Json => println!("{}", to_json(&rows)),
        TableFormat::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(std::io::stdout());
            let csv_error = |e: csv::Error| Failure::invalid(e);
            writer.write_record(HEADER).map_err(csv_error)?;
            for row in &rows {
                writer.serialize(row).map_err(csv_error)?;
            }
            writer.flush()?;
        }
    }

    let failures = rows.iter().filter(|r| !r.ok()).count();
    if failures > 0 {
        eprintln!("{failures} of {} rows disagree", rows.len());
        return Ok(ExitCode::from(EXIT_CHECK_FAILED));
    }
    Ok(ExitCode::SUCCESS)
}
