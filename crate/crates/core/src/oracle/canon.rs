//! Canonical labeling for small bipartite graphs.
//!
//! Color refinement seeded with the two classes, then individualization of
//! one vertex of the first non-singleton cell at a time. Vertices with
//! identical neighborhoods are interchangeable, so only one per twin class
//! is branched on. The least biadjacency encoding over all leaves is the
//! canonical form.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{members, BipartiteGraph};

/// Byte string identifying a graph up to class-preserving isomorphism (and
/// the class swap when requested and `a = b`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for byte in &self.0 {
            write!(f, "{byte:02x}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical_form(g: &BipartiteGraph, allow_class_swap: bool) -> CanonicalForm {
    let direct = labeled_code(g);
    if allow_class_swap && g.a_size() == g.b_size() {
        let swapped = labeled_code(&g.swap_classes());
        return CanonicalForm(direct.min(swapped));
    }
    CanonicalForm(direct)
}

/// Refines `colors` until stable. New colors are ranks of the signature
/// `(old color, sorted neighbor colors)`, so the result only depends on the
/// isomorphism type of `(g, colors)`.
fn refine(g: &BipartiteGraph, colors: &mut [u32]) {
    let n = colors.len();
    let mut distinct = count_distinct(colors);
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<u32> = members(g.neighbors(v)).map(|w| colors[w]).collect();
                nbr.sort_unstable();
                (colors[v], nbr)
            })
            .collect();
        let mut ranks: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for sig in &signatures {
            ranks.insert(sig, 0);
        }
        for (rank, slot) in ranks.values_mut().enumerate() {
            *slot = rank as u32;
        }
        for (v, sig) in signatures.iter().enumerate() {
            colors[v] = ranks[sig];
        }
        let now = ranks.len();
        if now == distinct {
            break;
        }
        distinct = now;
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

fn encode(g: &BipartiteGraph, colors: &[u32]) -> Vec<u8> {
    let (a, b) = (g.a_size(), g.b_size());
    // A-vertices and B-vertices each sorted by their (distinct) colors
    let mut order_a: Vec<usize> = (0..a).collect();
    order_a.sort_by_key(|&v| colors[v]);
    let mut order_b: Vec<usize> = (a..a + b).collect();
    order_b.sort_by_key(|&v| colors[v]);

    let mut out = Vec::with_capacity(2 + (a * b).div_ceil(8));
    out.push(a as u8);
    out.push(b as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for &u in &order_a {
        for &v in &order_b {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
    out
}

fn search(g: &BipartiteGraph, colors: &[u32], best: &mut Option<Vec<u8>>) {
    let mut cells: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let Some(cell) = cells.into_values().find(|c| c.len() > 1) else {
        let code = encode(g, colors);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let mut tried: Vec<u64> = Vec::new();
    for &v in &cell {
        let nbrs = g.neighbors(v);
        if tried.contains(&nbrs) {
            continue;
        }
        tried.push(nbrs);
        let mut next: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
        next[v] -= 1;
        refine(g, &mut next);
        search(g, &next, best);
    }
}

fn labeled_code(g: &BipartiteGraph) -> Vec<u8> {
    let a = g.a_size();
    let mut colors: Vec<u32> = (0..g.order()).map(|v| u32::from(v >= a)).collect();
    refine(g, &mut colors);
    let mut best = None;
    search(g, &colors, &mut best);
    best.unwrap_or_else(|| encode(g, &colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_b2, enumerate_b1_family};

    fn cycle(h: usize) -> BipartiteGraph {
        let edges = (0..h).flat_map(|i| [(i, h + i), ((i + 1) % h, h + i)]);
        BipartiteGraph::from_edges(h, h, edges).unwrap()
    }

    #[test]
    fn relabeled_b2_has_same_form() {
        let g = build_b2(4, 5, 4).unwrap();
        // reverse A and rotate B
        let perm: Vec<usize> = (0..4).rev().chain((0..5).map(|j| 4 + (j + 2) % 5)).collect();
        let h = g.relabel(&perm).unwrap();
        assert_ne!(g, h);
        assert_eq!(canonical_form(&g, true), canonical_form(&h, true));
    }

    #[test]
    fn cycle_and_path_differ() {
        let c6 = cycle(3);
        let mut builder = c6.to_builder();
        builder.remove_edge(0, 5);
        let p6 = builder.build();
        assert_ne!(canonical_form(&c6, true), canonical_form(&p6, true));
    }

    #[test]
    fn b1_family_members_differ() {
        let fam = enumerate_b1_family(4, 4, 8).unwrap();
        assert_ne!(canonical_form(&fam[0], true), canonical_form(&fam[1], true));
    }

    #[test]
    fn class_swap_only_when_allowed() {
        // star centered in A vs star centered in B, both on (2, 2)
        let g = BipartiteGraph::from_edges(2, 2, [(0, 2), (0, 3)]).unwrap();
        let h = g.swap_classes();
        assert_ne!(canonical_form(&g, false), canonical_form(&h, false));
        assert_eq!(canonical_form(&g, true), canonical_form(&h, true));
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        let e = BipartiteGraph::empty(16, 16).unwrap();
        let k = BipartiteGraph::complete_bipartite(16, 16).unwrap();
        assert_ne!(canonical_form(&e, true), canonical_form(&k, true));
        let c = cycle(10);
        assert_eq!(canonical_form(&c, true), canonical_form(&c.swap_classes(), true));
    }
}
