//! Unpruned reference scan.
//!
//! Visits every edge mask of `K_{a,b}`, with its own plain DFS path and
//! cycle enumeration and its own connectivity tests, so that it shares no
//! search code with the optimized enumerator.

use std::collections::BTreeSet;

use crate::formulas::{Connectivity, ExtremalParams, Forbidden};
use crate::graph::BipartiteGraph;

use super::canon::{canonical_form, CanonicalForm};

fn neighbors_of(g: &BipartiteGraph, v: usize) -> Vec<usize> {
    (0..g.order()).filter(|&w| g.has_edge(v, w)).collect()
}

fn connected_without(g: &BipartiteGraph, removed: Option<usize>) -> bool {
    let alive: Vec<usize> = (0..g.order()).filter(|&v| Some(v) != removed).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen = vec![false; g.order()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for w in neighbors_of(g, v) {
            if Some(w) != removed && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

pub fn naive_is_connected(g: &BipartiteGraph) -> bool {
    connected_without(g, None)
}

pub fn naive_is_two_connected(g: &BipartiteGraph) -> bool {
    g.order() >= 3 && connected_without(g, None) && (0..g.order()).all(|v| connected_without(g, Some(v)))
}

fn walk(g: &BipartiteGraph, path: &mut Vec<usize>, on: &mut [bool], best_path: &mut usize, best_cycle: &mut usize) {
    let len = path.len();
    *best_path = (*best_path).max(len);
    let head = path[len - 1];
    if len >= 3 && g.has_edge(head, path[0]) {
        *best_cycle = (*best_cycle).max(len);
    }
    for w in neighbors_of(g, head) {
        if !on[w] {
            on[w] = true;
            path.push(w);
            walk(g, path, on, best_path, best_cycle);
            path.pop();
            on[w] = false;
        }
    }
}

/// `(longest path vertex count, circumference)` by exhaustive DFS over all
/// simple paths from every start vertex.
pub fn naive_path_and_cycle(g: &BipartiteGraph) -> (usize, usize) {
    let mut best_path = 0;
    let mut best_cycle = 0;
    let mut on = vec![false; g.order()];
    for s in 0..g.order() {
        on[s] = true;
        walk(g, &mut vec![s], &mut on, &mut best_path, &mut best_cycle);
        on[s] = false;
    }
    (best_path, best_cycle)
}

pub fn naive_feasible(g: &BipartiteGraph, params: &ExtremalParams) -> bool {
    let connected = match params.connectivity {
        Connectivity::Any => true,
        Connectivity::Connected => naive_is_connected(g),
        Connectivity::TwoConnected => naive_is_two_connected(g),
    };
    if !connected {
        return false;
    }
    let (path, cycle) = naive_path_and_cycle(g);
    match params.family {
        Forbidden::Path { vertices } => path < vertices,
        Forbidden::LongCycles { half_length } => cycle < 2 * half_length,
    }
}

/// Maximum edge count over all feasible graphs and the canonical forms of
/// the graphs attaining it.
pub fn naive_scan(params: &ExtremalParams, allow_class_swap: bool) -> (Option<usize>, BTreeSet<CanonicalForm>) {
    let bits = params.a * params.b;
    assert!(bits < 32, "naive scan is meant for tiny instances");
    let mut best: Option<usize> = None;
    let mut forms = BTreeSet::new();
    for mask in 0u64..(1u64 << bits) {
        let g = BipartiteGraph::from_edge_mask(params.a, params.b, mask).expect("small graph");
        if !naive_feasible(&g, params) {
            continue;
        }
        let edges = g.edge_count();
        if best.is_none_or(|b| edges > b) {
            best = Some(edges);
            forms.clear();
        }
        if best == Some(edges) {
            forms.insert(canonical_form(&g, allow_class_swap));
        }
    }
    (best, forms)
}
