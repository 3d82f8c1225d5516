//! Generators for the extremal graph families.
//!
//! Vertex placement is fixed so that graph6 output is reproducible: complete
//! cores take the lowest A-indices, attachment and pendant vertices the
//! highest, and attachments hang off the first B-vertices.

use thiserror::Error;

use crate::formulas::{
    grs_even_branch, grs_odd_branch, path_core_width, path_params_in_range, FormulaError, GrsBranch, PATH_RANGE,
};
use crate::graph::{BipartiteGraph, GraphBuilder, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("parameters (a={a}, b={b}, {name}={len}) violate {requirement}")]
    OutOfRange {
        a: usize,
        b: usize,
        name: &'static str,
        len: usize,
        requirement: &'static str,
    },
    #[error("pendant layout {counts:?} does not place {expected} pendants on {b} vertices")]
    BadLayout {
        counts: Vec<usize>,
        expected: usize,
        b: usize,
    },
    #[error("for odd k all pendants must share one B-vertex, got {0:?}")]
    LayoutNotConcentrated(Vec<usize>),
    #[error("the family is a single graph for odd k={0}; use build_b1")]
    OddFamily(usize),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How many pendant A-vertices hang off each B-vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantLayout {
    counts: Vec<usize>,
}

impl PendantLayout {
    pub fn new(counts: Vec<usize>) -> Self {
        Self { counts }
    }

    /// All `pendants` on the first B-vertex.
    pub fn concentrated(b: usize, pendants: usize) -> Self {
        let mut counts = vec![0; b];
        if let Some(first) = counts.first_mut() {
            *first = pendants;
        }
        Self { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn is_concentrated(&self) -> bool {
        self.counts.iter().filter(|&&c| c > 0).count() <= 1
    }

    fn validate(&self, b: usize, expected: usize) -> Result<(), ConstructionError> {
        if self.counts.len() != b || self.total() != expected {
            return Err(ConstructionError::BadLayout {
                counts: self.counts.clone(),
                expected,
                b,
            });
        }
        Ok(())
    }
}

/// `K_{ℓ−2,b}` plus `a−ℓ+2` further A-vertices, each joined to the first two
/// B-vertices. The unique extremal 2-connected graph without cycles of
/// length ≥ 2ℓ.
pub fn build_b2(a: usize, b: usize, l: usize) -> Result<BipartiteGraph, ConstructionError> {
    if !(b >= a && a >= l && l >= 4) {
        return Err(ConstructionError::OutOfRange {
            a,
            b,
            name: "l",
            len: l,
            requirement: "b >= a >= l >= 4",
        });
    }
    let core = l - 2;
    let mut builder = GraphBuilder::new(a, b)?;
    for u in 0..core {
        for v in a..a + b {
            builder.add_edge(u, v)?;
        }
    }
    for u in core..a {
        builder.add_edge(u, a)?.add_edge(u, a + 1)?;
    }
    Ok(builder.build())
}

/// `K_{t,b}` with `t = ⌊(k−3)/2⌋`, plus `a − t` pendant A-vertices placed
/// according to `layout` (default: all on the first B-vertex).
pub fn build_b1(
    a: usize,
    b: usize,
    k: usize,
    layout: Option<&PendantLayout>,
) -> Result<BipartiteGraph, ConstructionError> {
    if !path_params_in_range(a, b, k) {
        return Err(ConstructionError::OutOfRange {
            a,
            b,
            name: "k",
            len: k,
            requirement: PATH_RANGE,
        });
    }
    let core = path_core_width(k);
    let pendants = a - core;
    let default_layout;
    let layout = match layout {
        Some(layout) => {
            layout.validate(b, pendants)?;
            if k % 2 == 1 && !layout.is_concentrated() {
                return Err(ConstructionError::LayoutNotConcentrated(layout.counts.clone()));
            }
            layout
        }
        None => {
            default_layout = PendantLayout::concentrated(b, pendants);
            &default_layout
        }
    };

    let mut builder = GraphBuilder::new(a, b)?;
    for u in 0..core {
        for v in a..a + b {
            builder.add_edge(u, v)?;
        }
    }
    let mut next = core;
    for (j, &count) in layout.counts.iter().enumerate() {
        for _ in 0..count {
            builder.add_edge(next, a + j)?;
            next += 1;
        }
    }
    Ok(builder.build())
}

/// Partitions of `n` into at most `max_parts` positive parts, each in
/// non-increasing order, listed with larger leading parts first.
pub fn partitions(n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cap: usize, parts_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for part in (1..=cap.min(n)).rev() {
            cur.push(part);
            go(n - part, part, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// One representative per isomorphism class of the even-`k` family: the
/// B-vertices of the complete core are interchangeable, so classes
/// correspond to partitions of the pendant count into at most `b` parts.
pub fn enumerate_b1_family(a: usize, b: usize, k: usize) -> Result<Vec<BipartiteGraph>, ConstructionError> {
    if k % 2 == 1 {
        return Err(ConstructionError::OddFamily(k));
    }
    if !path_params_in_range(a, b, k) {
        return Err(ConstructionError::OutOfRange {
            a,
            b,
            name: "k",
            len: k,
            requirement: PATH_RANGE,
        });
    }
    let pendants = a - path_core_width(k);
    partitions(pendants, b)
        .into_iter()
        .map(|mut parts| {
            parts.resize(b, 0);
            build_b1(a, b, k, Some(&PendantLayout::new(parts)))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Forbids `P_{2ℓ+2}`.
    Even,
    /// Forbids `P_{2ℓ+3}`.
    Odd,
}

impl std::str::FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            _ => Err(format!("parity must be `even` or `odd`, got `{s}`")),
        }
    }
}

/// Complete bipartite pieces on the given class ranges, placed side by side.
fn add_complete(
    builder: &mut GraphBuilder,
    a: usize,
    a_range: std::ops::Range<usize>,
    b_range: std::ops::Range<usize>,
) -> Result<(), GraphError> {
    for u in a_range {
        for j in b_range.clone() {
            builder.add_edge(u, a + j)?;
        }
    }
    Ok(())
}

/// Extremal graph (possibly disconnected) for the unconstrained path
/// problem, following the same branch order as the formulas.
pub fn build_grs_extremal(a: usize, b: usize, l: usize, parity: Parity) -> Result<BipartiteGraph, ConstructionError> {
    let branch = match parity {
        Parity::Even => grs_even_branch(a, b, l)?,
        Parity::Odd => grs_odd_branch(a, b, l)?,
    };
    let mut builder = GraphBuilder::new(a, b)?;
    match branch {
        GrsBranch::Complete => add_complete(&mut builder, a, 0..a, 0..b)?,
        GrsBranch::FullCore => add_complete(&mut builder, a, 0..l, 0..b)?,
        GrsBranch::PendantCore => {
            add_complete(&mut builder, a, 0..l, 0..b)?;
            for u in l..a {
                builder.add_edge(u, a)?;
            }
        }
        GrsBranch::TwoBalanced => {
            add_complete(&mut builder, a, 0..l + 1, 0..l + 1)?;
            add_complete(&mut builder, a, l + 1..a, l + 1..b)?;
        }
        GrsBranch::SplitCores => {
            add_complete(&mut builder, a, 0..l, 0..b - l)?;
            add_complete(&mut builder, a, l..a, b - l..b)?;
        }
    }
    Ok(builder.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{grs_even, grs_odd, thm1_bound, thm2_bound};
    use crate::search::{circumference, longest_path_vertices, Budget};
    use crate::structure::{block_decomposition, is_connected, is_two_connected};

    #[test]
    fn b2_examples() {
        let g = build_b2(4, 5, 4).unwrap();
        assert_eq!(g.edge_count(), 14);
        assert_eq!(thm1_bound(4, 5, 4).unwrap(), 14);
        assert_eq!(build_b2(5, 7, 5).unwrap().edge_count(), 25);
        for l in 4..9 {
            for b in l..l + 5 {
                assert_eq!(build_b2(l, b, l).unwrap().edge_count(), (l - 2) * b + 4);
            }
        }
        assert!(build_b2(3, 5, 4).is_err());
    }

    #[test]
    fn b2_is_two_connected_with_short_cycles() {
        let g = build_b2(4, 4, 4).unwrap();
        assert!(is_two_connected(&g));
        assert_eq!(circumference(&g, Budget::default()).unwrap().0, 6);
    }

    #[test]
    fn b1_examples() {
        let g = build_b1(4, 5, 9, None).unwrap();
        assert_eq!(g.edge_count(), 16);
        assert_eq!(thm2_bound(4, 5, 9).unwrap(), 16);
        assert_eq!(longest_path_vertices(&g, Budget::default()).unwrap().0, 8);
        let d = block_decomposition(&g).unwrap();
        let mut sizes: Vec<usize> = d.blocks.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 8]);

        assert_eq!(build_b1(5, 6, 9, None).unwrap().edge_count(), 20);

        let layout = PendantLayout::new(vec![1, 1, 0, 0]);
        let g = build_b1(4, 4, 8, Some(&layout)).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert!(is_connected(&g));
        assert!(longest_path_vertices(&g, Budget::default()).unwrap().0 < 8);
    }

    #[test]
    fn b1_layout_errors() {
        let spread = PendantLayout::new(vec![1, 1, 0, 0, 0]);
        assert_eq!(
            build_b1(5, 5, 9, Some(&spread)),
            Err(ConstructionError::LayoutNotConcentrated(vec![1, 1, 0, 0, 0]))
        );
        let short = PendantLayout::new(vec![2, 0]);
        assert!(matches!(
            build_b1(4, 4, 8, Some(&short)),
            Err(ConstructionError::BadLayout { .. })
        ));
        assert!(build_b1(3, 4, 8, None).is_err());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(2, 4), vec![vec![2], vec![1, 1]]);
        assert_eq!(partitions(5, 5).len(), 7);
        assert_eq!(partitions(5, 2).len(), 3);
        assert_eq!(partitions(0, 3), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn b1_family_sizes() {
        assert_eq!(enumerate_b1_family(4, 4, 8).unwrap().len(), 2);
        assert_eq!(enumerate_b1_family(5, 6, 10).unwrap().len(), 2);
        for b in 4..12 {
            assert_eq!(enumerate_b1_family(4, b, 8).unwrap().len(), 2);
        }
        assert_eq!(enumerate_b1_family(4, 5, 9), Err(ConstructionError::OddFamily(9)));
    }

    #[test]
    fn grs_examples() {
        let g = build_grs_extremal(3, 4, 2, Parity::Even).unwrap();
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.degree(2), 0);
        assert!(longest_path_vertices(&g, Budget::default()).unwrap().0 < 6);

        let g = build_grs_extremal(6, 6, 2, Parity::Odd).unwrap();
        assert_eq!(g.edge_count(), 18);
        assert!(!is_connected(&g));
        assert!(longest_path_vertices(&g, Budget::default()).unwrap().0 < 7);

        let g = build_grs_extremal(2, 5, 2, Parity::Even).unwrap();
        assert_eq!(g, BipartiteGraph::complete_bipartite(2, 5).unwrap());
    }

    #[test]
    fn grs_constructions_attain_formulas() {
        for l in 1..5 {
            for a in 1..10 {
                for b in a..12 {
                    let even = build_grs_extremal(a, b, l, Parity::Even).unwrap();
                    assert_eq!(even.edge_count(), grs_even(a, b, l).unwrap());
                    let odd = build_grs_extremal(a, b, l, Parity::Odd).unwrap();
                    assert_eq!(odd.edge_count(), grs_odd(a, b, l).unwrap());
                }
            }
        }
    }
}
