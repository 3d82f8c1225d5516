//! Brute-force ground truth: every spanning subgraph of `K_{a,b}` is an edge
//! mask, and the maximum over feasible masks is found by scanning layers of
//! decreasing popcount until one contains a feasible graph. All layers above
//! it are scanned completely, so the reported maximum is certified.
//!
//! Within a layer, masks are sharded by their highest set bit and the shards
//! run on a rayon pool. Extremal graphs are deduplicated by canonical form
//! only after the scan, and the output order is the sorted canonical order,
//! independent of the worker count.

pub mod canon;
pub mod naive;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::{build_b1, build_b2, enumerate_b1_family, ConstructionError};
use crate::formulas::{Connectivity, ExtremalParams, Forbidden, FormulaError, Theorem};
use crate::graph::{BipartiteGraph, Graph6Record};
use crate::search::{is_long_cycle_free, is_path_free, Budget, SearchError};
use crate::structure::{is_connected, is_two_connected};

pub use canon::{canonical_form, CanonicalForm};

pub const DEFAULT_EDGE_BIT_CAP: usize = 20;
/// Hard ceiling for `--cap`: masks are `u64` and layers are enumerated
/// combinatorially, so this is about runtime, not representation.
pub const MAX_EDGE_BIT_CAP: usize = 48;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("K_{{{a},{b}}} has {bits} edges, above the enumeration cap of {cap}")]
    CapExceeded {
        a: usize,
        b: usize,
        bits: usize,
        cap: usize,
    },
    #[error("oracle parameters need 1 <= a <= b, got a={a}, b={b}")]
    InvalidParams { a: usize, b: usize },
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("could not start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone)]
pub struct OracleConfig {
    pub edge_bit_cap: usize,
    /// `None` uses rayon's default thread count.
    pub workers: Option<usize>,
    /// Treat the two classes as interchangeable when `a = b`.
    pub allow_class_swap: bool,
    pub budget: Duration,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            edge_bit_cap: DEFAULT_EDGE_BIT_CAP,
            workers: None,
            allow_class_swap: true,
            budget: Duration::from_secs(600),
        }
    }
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub params: ExtremalParams,
    /// `None` when no graph satisfies the constraints at all.
    pub max_edges: Option<usize>,
    /// One representative per isomorphism class, sorted by canonical form.
    pub extremal_graphs: Vec<BipartiteGraph>,
    pub canonical_forms: Vec<CanonicalForm>,
    pub graphs_scanned: u64,
    pub allow_class_swap: bool,
    pub elapsed: Duration,
}

/// JSON shape of an [`OracleResult`]. Timing is left out so that reports are
/// byte-identical across runs and worker counts.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub params: ExtremalParams,
    pub max_edges: Option<usize>,
    pub extremal_class_count: usize,
    pub extremal_graphs: Vec<Graph6Record>,
    pub graphs_scanned: u64,
    pub class_swap: bool,
}

impl OracleResult {
    pub fn report(&self) -> OracleReport {
        OracleReport {
            params: self.params,
            max_edges: self.max_edges,
            extremal_class_count: self.extremal_graphs.len(),
            extremal_graphs: self.extremal_graphs.iter().map(Graph6Record::from).collect(),
            graphs_scanned: self.graphs_scanned,
            class_swap: self.allow_class_swap,
        }
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Connectivity class plus freeness, cheapest tests first.
pub fn is_feasible(g: &BipartiteGraph, params: &ExtremalParams, budget: Budget) -> Result<bool, SearchError> {
    let connected = match params.connectivity {
        Connectivity::Any => true,
        Connectivity::Connected => is_connected(g),
        Connectivity::TwoConnected => g.min_degree() >= 2 && is_two_connected(g),
    };
    if !connected {
        return Ok(false);
    }
    match params.family {
        Forbidden::Path { vertices } => is_path_free(g, vertices, budget),
        Forbidden::LongCycles { half_length } => is_long_cycle_free(g, half_length, budget),
    }
}

/// Feasible masks of popcount `ones` whose highest set bit is `high`.
fn scan_shard(params: &ExtremalParams, high: usize, ones: usize, budget: Budget) -> Result<Vec<u64>, SearchError> {
    let top = 1u64 << high;
    let rest = ones - 1;
    let limit = 1u64 << high;
    let mut found = Vec::new();
    let mut combo: u64 = if rest == 0 { 0 } else { (1u64 << rest) - 1 };
    let mut count = 0u32;
    loop {
        count = count.wrapping_add(1);
        if count & 0x3ff == 0 && budget.is_exhausted() {
            return Err(SearchError::BudgetExhausted);
        }
        let mask = top | combo;
        let g = BipartiteGraph::from_edge_mask(params.a, params.b, mask).expect("bounded by cap");
        if is_feasible(&g, params, budget)? {
            found.push(mask);
        }
        if combo == 0 {
            break;
        }
        // next combination with the same popcount (Gosper)
        let low = combo & combo.wrapping_neg();
        let ripple = combo + low;
        let next = (((ripple ^ combo) >> 2) / low) | ripple;
        if next >= limit {
            break;
        }
        combo = next;
    }
    Ok(found)
}

fn scan_layer(params: &ExtremalParams, bits: usize, ones: usize, budget: Budget) -> Result<Vec<u64>, SearchError> {
    if ones == 0 {
        let g = BipartiteGraph::from_edge_mask(params.a, params.b, 0).expect("bounded by cap");
        return Ok(if is_feasible(&g, params, budget)? {
            vec![0]
        } else {
            Vec::new()
        });
    }
    let shards: Vec<Vec<u64>> = (ones - 1..bits)
        .into_par_iter()
        .map(|high| scan_shard(params, high, ones, budget))
        .collect::<Result<_, _>>()?;
    let mut masks: Vec<u64> = shards.into_iter().flatten().collect();
    masks.sort_unstable();
    Ok(masks)
}

/// Exact maximum edge count and all extremal graphs up to isomorphism.
pub fn enumerate_extremal(params: &ExtremalParams, config: &OracleConfig) -> Result<OracleResult, OracleError> {
    let (a, b) = (params.a, params.b);
    if a == 0 || a > b {
        return Err(OracleError::InvalidParams { a, b });
    }
    let bits = a * b;
    let cap = config.edge_bit_cap.min(MAX_EDGE_BIT_CAP);
    if bits > cap {
        return Err(OracleError::CapExceeded { a, b, bits, cap });
    }
    let started = Instant::now();
    let budget = Budget::new(config.budget);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.unwrap_or(0))
        .build()?;

    let mut scanned = 0u64;
    let mut max_edges = None;
    let mut masks = Vec::new();
    for ones in (0..=bits).rev() {
        scanned += binomial(bits, ones);
        let layer = pool.install(|| scan_layer(params, bits, ones, budget))?;
        if !layer.is_empty() {
            max_edges = Some(ones);
            masks = layer;
            break;
        }
    }

    let mut classes: BTreeMap<CanonicalForm, BipartiteGraph> = BTreeMap::new();
    for mask in masks {
        let g = BipartiteGraph::from_edge_mask(a, b, mask).expect("bounded by cap");
        classes.entry(canonical_form(&g, config.allow_class_swap)).or_insert(g);
    }
    let (canonical_forms, extremal_graphs) = classes.into_iter().unzip();
    Ok(OracleResult {
        params: *params,
        max_edges,
        extremal_graphs,
        canonical_forms,
        graphs_scanned: scanned,
        allow_class_swap: config.allow_class_swap,
        elapsed: started.elapsed(),
    })
}

/// The graphs the closed-form statements name as the extremal ones, when
/// they name them.
pub fn predicted_extremal_family(params: &ExtremalParams) -> Result<Option<Vec<BipartiteGraph>>, OracleError> {
    let Some((theorem, len)) = params.theorem() else {
        return Ok(None);
    };
    let (a, b) = (params.a, params.b);
    Ok(match theorem {
        Theorem::Thm1 => Some(vec![build_b2(a, b, len)?]),
        Theorem::Thm2 if len % 2 == 1 => Some(vec![build_b1(a, b, len, None)?]),
        Theorem::Thm2 => Some(enumerate_b1_family(a, b, len)?),
        _ => None,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub params: ExtremalParams,
    pub theorem: Theorem,
    pub branch: &'static str,
    pub formula_value: Option<usize>,
    pub oracle_value: Option<usize>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub extremal_class_count: usize,
    pub predicted_class_count: Option<usize>,
    /// Whether the oracle's classes are exactly the predicted graphs.
    pub classes_match: Option<bool>,
}

/// Runs the oracle and lines its answer up against the closed form.
pub fn compare_with_formula(params: &ExtremalParams, config: &OracleConfig) -> Result<ComparisonReport, OracleError> {
    let evaluation = params.formula()?;
    let predicted = predicted_extremal_family(params)?;
    let result = enumerate_extremal(params, config)?;

    let predicted_forms: Option<BTreeSet<CanonicalForm>> = predicted.map(|graphs| {
        graphs
            .iter()
            .map(|g| canonical_form(g, config.allow_class_swap))
            .collect()
    });
    let found: BTreeSet<CanonicalForm> = result.canonical_forms.iter().cloned().collect();
    Ok(ComparisonReport {
        params: *params,
        theorem: evaluation.theorem,
        branch: evaluation.branch,
        formula_value: evaluation.value,
        oracle_value: result.max_edges,
        matches: evaluation.value.is_some() && evaluation.value == result.max_edges,
        extremal_class_count: result.extremal_graphs.len(),
        predicted_class_count: predicted_forms.as_ref().map(BTreeSet::len),
        classes_match: predicted_forms.map(|p| p == found),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: usize, b: usize, family: &str, connectivity: Connectivity) -> ExtremalParams {
        ExtremalParams::new(a, b, family.parse().unwrap(), connectivity)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(20, 0), 1);
        assert_eq!(binomial(20, 4), 4845);
        assert_eq!(binomial(5, 7), 0);
        assert_eq!((0..=16).map(|k| binomial(16, k)).sum::<u64>(), 1 << 16);
    }

    #[test]
    fn small_path_instance() {
        let r = enumerate_extremal(&params(2, 3, "P5", Connectivity::Any), &OracleConfig::default()).unwrap();
        assert_eq!(r.max_edges, Some(4));
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_extremal(&params(5, 5, "P8", Connectivity::Any), &OracleConfig::default()).unwrap_err();
        assert!(matches!(err, OracleError::CapExceeded { bits: 25, cap: 20, .. }));
    }

    #[test]
    fn infeasible_reports_none() {
        let r = enumerate_extremal(
            &params(1, 3, "Cge4", Connectivity::TwoConnected),
            &OracleConfig::default(),
        )
        .unwrap();
        assert_eq!(r.max_edges, None);
        assert!(r.extremal_graphs.is_empty());
        assert_eq!(r.graphs_scanned, 8);
    }

    #[test]
    fn jackson_small_value() {
        let cfg = OracleConfig::default();
        let report = compare_with_formula(&params(3, 4, "Cge6", Connectivity::Any), &cfg).unwrap();
        assert!(report.matches);
        assert_eq!(report.oracle_value, Some(9));
    }

    #[test]
    fn matches_naive_on_a_few_instances() {
        for p in [
            params(2, 3, "P4", Connectivity::Connected),
            params(3, 3, "Cge6", Connectivity::TwoConnected),
            params(2, 4, "P5", Connectivity::Any),
        ] {
            let fast = enumerate_extremal(&p, &OracleConfig::default()).unwrap();
            let (max, forms) = naive::naive_scan(&p, true);
            assert_eq!(fast.max_edges, max, "{p}");
            assert_eq!(fast.canonical_forms.into_iter().collect::<BTreeSet<_>>(), forms, "{p}");
        }
    }
}
