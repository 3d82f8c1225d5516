use std::collections::BTreeSet;

use bipartite_turan::constructions::build_b1;
use bipartite_turan::formulas::{Connectivity, ExtremalParams, Forbidden};
use bipartite_turan::oracle::naive::naive_feasible;
use bipartite_turan::oracle::{
    canonical_form, compare_with_formula, enumerate_extremal, is_feasible, OracleConfig, OracleError,
};
use bipartite_turan::search::Budget;

fn params(a: usize, b: usize, family: &str, connectivity: Connectivity) -> ExtremalParams {
    ExtremalParams::new(a, b, family.parse().unwrap(), connectivity)
}

fn config() -> OracleConfig {
    OracleConfig::default()
}

#[test]
fn connected_p8_free_on_k44() {
    let r = enumerate_extremal(&params(4, 4, "P8", Connectivity::Connected), &config()).unwrap();
    assert_eq!(r.max_edges, Some(10));
    assert_eq!(r.extremal_graphs.len(), 2);
}

#[test]
fn long_cycle_free_on_k34() {
    let r = enumerate_extremal(&params(3, 4, "Cge6", Connectivity::Any), &config()).unwrap();
    assert_eq!(r.max_edges, Some(9));
}

#[test]
fn oversized_host_is_refused() {
    let err = enumerate_extremal(&params(5, 5, "P8", Connectivity::Any), &config()).unwrap_err();
    assert!(matches!(err, OracleError::CapExceeded { .. }));
    let err = enumerate_extremal(&params(5, 4, "P8", Connectivity::Any), &config()).unwrap_err();
    assert!(matches!(err, OracleError::InvalidParams { .. }));
}

#[test]
fn reports_are_identical_across_worker_counts() {
    let p = params(4, 5, "P8", Connectivity::Connected);
    let one = OracleConfig {
        workers: Some(1),
        ..config()
    };
    let four = OracleConfig {
        workers: Some(4),
        ..config()
    };
    let a = serde_json::to_string(&enumerate_extremal(&p, &one).unwrap().report()).unwrap();
    let b = serde_json::to_string(&enumerate_extremal(&p, &four).unwrap().report()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn extremal_graphs_reverify_independently() {
    for p in [
        params(4, 4, "Cge8", Connectivity::TwoConnected),
        params(4, 4, "P8", Connectivity::Connected),
        params(3, 5, "P6", Connectivity::Any),
        params(3, 3, "Cge8", Connectivity::Any),
    ] {
        let r = enumerate_extremal(&p, &config()).unwrap();
        assert!(!r.extremal_graphs.is_empty());
        for g in &r.extremal_graphs {
            assert_eq!(Some(g.edge_count()), r.max_edges);
            assert!(naive_feasible(g, &p), "{p}");
            assert!(is_feasible(g, &p, Budget::unlimited()).unwrap());
        }
    }
}

#[test]
fn maximum_grows_with_the_larger_class() {
    let families = ["P6", "P7", "P8", "Cge6", "Cge8"];
    let conns = [Connectivity::Any, Connectivity::Connected, Connectivity::TwoConnected];
    for family in families {
        for connectivity in conns {
            // a 2-connected P_k-free graph stops existing once the host is large enough
            if family.starts_with('P') && connectivity == Connectivity::TwoConnected {
                continue;
            }
            for a in 1..=3 {
                let values: Vec<Option<usize>> = (a..=20 / a)
                    .map(|b| {
                        enumerate_extremal(&params(a, b, family, connectivity), &config())
                            .unwrap()
                            .max_edges
                    })
                    .collect();
                assert!(
                    values.windows(2).all(|w| w[0] <= w[1]),
                    "a={a} {family} {connectivity}: {values:?}"
                );
            }
        }
    }
}

#[test]
fn class_swap_merges_mirror_images() {
    let p = params(3, 3, "P5", Connectivity::Any);
    let merged = enumerate_extremal(&p, &config()).unwrap();
    let split = enumerate_extremal(
        &p,
        &OracleConfig {
            allow_class_swap: false,
            ..config()
        },
    )
    .unwrap();
    assert_eq!(merged.max_edges, split.max_edges);
    assert!(split.extremal_graphs.len() >= merged.extremal_graphs.len());
    let mirrored: BTreeSet<_> = split.extremal_graphs.iter().map(|g| canonical_form(g, true)).collect();
    assert_eq!(mirrored.len(), merged.extremal_graphs.len());
}

/// The odd-k statement also holds one step below a >= k/2, where a = (k-1)/2
/// and b > a; at b = a the complete graph is already P_k-free and wins.
#[test]
fn odd_path_boundary_beyond_the_default_cap() {
    let wide = OracleConfig {
        edge_bit_cap: 30,
        ..config()
    };
    for (a, b, k) in [(4, 6, 9), (4, 7, 9), (5, 6, 11)] {
        let p = ExtremalParams::new(a, b, Forbidden::Path { vertices: k }, Connectivity::Connected);
        let report = compare_with_formula(&p, &wide).unwrap();
        assert!(report.matches, "{report:?}");
        assert_eq!(report.classes_match, Some(true));
        let r = enumerate_extremal(&p, &wide).unwrap();
        assert_eq!(
            r.canonical_forms[0],
            canonical_form(&build_b1(a, b, k, None).unwrap(), true)
        );
    }
    for (a, k) in [(4, 9), (5, 11)] {
        let p = ExtremalParams::new(a, a, Forbidden::Path { vertices: k }, Connectivity::Connected);
        assert!(compare_with_formula(&p, &wide).is_err());
        assert_eq!(enumerate_extremal(&p, &wide).unwrap().max_edges, Some(a * a));
    }
}
