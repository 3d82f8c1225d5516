use bipartite_turan::constructions::{
    build_b1, build_b2, build_grs_extremal, enumerate_b1_family, partitions, Parity, PendantLayout,
};
use bipartite_turan::formulas::{grs_even, grs_odd, path_params_in_range, thm1_bound, thm2_bound};
use bipartite_turan::graph::BipartiteGraph;
use bipartite_turan::oracle::canonical_form;
use bipartite_turan::search::{circumference, is_path_free, longest_path_vertices, Budget};
use bipartite_turan::structure::{is_connected, is_two_connected};

fn degree_sums_agree(g: &BipartiteGraph) -> bool {
    let sum_a: usize = (0..g.a_size()).map(|v| g.degree(v)).sum();
    let sum_b: usize = (g.a_size()..g.order()).map(|v| g.degree(v)).sum();
    sum_a == g.edge_count() && sum_b == g.edge_count()
}

#[test]
fn b2_matches_its_bound_and_shape() {
    for l in 4..=10 {
        for a in l..=26 - l {
            for b in a..=26 - a {
                let g = build_b2(a, b, l).unwrap();
                assert_eq!(g.edge_count(), thm1_bound(a, b, l).unwrap());
                assert!(degree_sums_agree(&g));
                assert!(is_two_connected(&g), "B2({a},{b},{l})");
            }
        }
    }
}

#[test]
fn b1_family_matches_its_bound_and_shape() {
    for k in 8..=20 {
        for a in 1..=20 {
            for b in a..=26 - a {
                if !path_params_in_range(a, b, k) {
                    continue;
                }
                let bound = thm2_bound(a, b, k).unwrap();
                let g = build_b1(a, b, k, None).unwrap();
                assert_eq!(g.edge_count(), bound);
                assert!(is_connected(&g) && degree_sums_agree(&g));
                if k % 2 == 0 && a + b <= 14 {
                    for member in enumerate_b1_family(a, b, k).unwrap() {
                        assert_eq!(member.edge_count(), bound);
                        assert!(is_connected(&member));
                    }
                }
            }
        }
    }
}

#[test]
fn small_family_is_complete_and_free() {
    let family = enumerate_b1_family(4, 4, 8).unwrap();
    assert_eq!(family.len(), partitions(2, 4).len());
    for (i, g) in family.iter().enumerate() {
        assert!(is_connected(g));
        assert!(is_path_free(g, 8, Budget::unlimited()).unwrap());
        for h in &family[i + 1..] {
            assert_ne!(canonical_form(g, true), canonical_form(h, true));
        }
    }
}

#[test]
fn every_layout_gives_a_free_graph() {
    for counts in partitions(3, 6) {
        let mut counts = counts;
        counts.resize(6, 0);
        let g = build_b1(6, 6, 10, Some(&PendantLayout::new(counts.clone()))).unwrap();
        assert!(is_path_free(&g, 10, Budget::unlimited()).unwrap(), "layout {counts:?}");
    }
}

#[test]
fn extremal_graphs_are_free_on_a_small_grid() {
    for l in 4..=6 {
        for a in l..=9 {
            for b in a..=12 - a {
                let (len, _) = circumference(&build_b2(a, b, l).unwrap(), Budget::unlimited()).unwrap();
                assert!(len <= 2 * l - 2);
            }
        }
    }
    for k in 8..=11 {
        for a in 4..=6 {
            for b in a..=12 - a {
                if path_params_in_range(a, b, k) {
                    let (m, _) = longest_path_vertices(&build_b1(a, b, k, None).unwrap(), Budget::unlimited()).unwrap();
                    assert!(m < k);
                }
            }
        }
    }
}

#[test]
fn grs_graphs_attain_their_values_and_stay_free() {
    for l in 1..=3 {
        for a in 1..=7 {
            for b in a..=8 {
                let even = build_grs_extremal(a, b, l, Parity::Even).unwrap();
                assert_eq!(even.edge_count(), grs_even(a, b, l).unwrap());
                assert!(
                    is_path_free(&even, 2 * l + 2, Budget::unlimited()).unwrap(),
                    "even ({a},{b},{l})"
                );
                let odd = build_grs_extremal(a, b, l, Parity::Odd).unwrap();
                assert_eq!(odd.edge_count(), grs_odd(a, b, l).unwrap());
                assert!(
                    is_path_free(&odd, 2 * l + 3, Budget::unlimited()).unwrap(),
                    "odd ({a},{b},{l})"
                );
            }
        }
    }
}
