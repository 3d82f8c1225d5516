#![allow(dead_code)]

use bipartite_turan::graph::BipartiteGraph;
use bipartite_turan::structure::{is_connected, is_two_connected};
use proptest::prelude::*;
use rand::Rng;

/// Random bipartite graph with `a, b >= 1`, `a + b <= max_order`.
pub fn graph(max_order: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..max_order)
        .prop_flat_map(move |a| (Just(a), 1..=(max_order - a)))
        .prop_flat_map(|(a, b)| {
            let edges = prop::collection::vec((0..a, 0..b), 0..=a * b);
            (Just(a), Just(b), edges)
        })
        .prop_map(|(a, b, edges)| BipartiteGraph::from_edges(a, b, edges.into_iter().map(|(i, j)| (i, a + j))).unwrap())
}

pub fn connected_graph(max_order: usize) -> impl Strategy<Value = BipartiteGraph> {
    graph(max_order).prop_filter("connected", is_connected)
}

/// Edge-density sampling with rejection until the graph is 2-connected.
pub fn random_two_connected(rng: &mut impl Rng, max_order: usize) -> BipartiteGraph {
    loop {
        let a = rng.gen_range(2..=max_order / 2);
        let b = rng.gen_range(2..=max_order - a);
        let p: f64 = rng.gen_range(0.3..0.9);
        let edges: Vec<(usize, usize)> = (0..a)
            .flat_map(|i| (0..b).map(move |j| (i, a + j)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = BipartiteGraph::from_edges(a, b, edges).unwrap();
        if is_two_connected(&g) {
            return g;
        }
    }
}
