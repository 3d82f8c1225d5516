//! Bipartite graphs with a fixed color-class split and bitset adjacency.
//!
//! Vertices `0..a` form class A and vertices `a..a+b` form class B. Every
//! on-disk format and every other module relies on this convention, so class
//! membership is always computable from the index alone.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on `a + b`; one adjacency row is a single `u64`.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices packed into one word.
pub type VertexSet = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph with {0} vertices exceeds the {MAX_VERTICES}-vertex cap")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range for class {class} (size {size})")]
    OutOfRange { vertex: usize, class: char, size: usize },
    #[error("edge ({0}, {1}) does not join class A to class B")]
    SameClass(usize, usize),
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("edge ({u}, {v}) lies inside one class under the declared split |A| = {a_size}")]
    NotBipartite { u: usize, v: usize, a_size: usize },
    #[error("edge mask needs {0} bits, more than fit in one word")]
    EdgeMaskTooWide(usize),
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask of the first `n` indices.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the indices set in a [`VertexSet`] in increasing order.
#[derive(Debug, Clone, Copy)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

pub fn members(set: VertexSet) -> Members {
    Members(set)
}

pub fn set_of(vertices: impl IntoIterator<Item = usize>) -> VertexSet {
    vertices.into_iter().fold(0, |acc, v| acc | bit(v))
}

/// Labeled bipartite graph with distinguished color classes.
///
/// Immutable once built; use [`GraphBuilder`] to assemble one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    a: usize,
    b: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BipartiteGraph")
            .field("a", &self.a)
            .field("b", &self.b)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_order(a: usize, b: usize) -> Result<(), GraphError> {
    match a.checked_add(b) {
        Some(n) if n <= MAX_VERTICES => Ok(()),
        _ => Err(GraphError::TooManyVertices(a.saturating_add(b))),
    }
}

impl BipartiteGraph {
    pub fn empty(a: usize, b: usize) -> Result<Self, GraphError> {
        check_order(a, b)?;
        Ok(Self {
            a,
            b,
            adj: vec![0; a + b],
        })
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        check_order(a, b)?;
        let a_mask = low_mask(a);
        let b_mask = low_mask(a + b) & !a_mask;
        let adj = (0..a + b).map(|v| if v < a { b_mask } else { a_mask }).collect();
        Ok(Self { a, b, adj })
    }

    /// Builds a graph from `(A-vertex, B-vertex)` pairs given in global indices.
    pub fn from_edges(a: usize, b: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut builder = GraphBuilder::new(a, b)?;
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    /// Decodes an edge mask over `K_{a,b}`: bit `i * b + j` is the edge
    /// between A-vertex `i` and B-vertex `a + j`.
    pub fn from_edge_mask(a: usize, b: usize, mask: u64) -> Result<Self, GraphError> {
        check_order(a, b)?;
        if a * b > 64 {
            return Err(GraphError::EdgeMaskTooWide(a * b));
        }
        let mut adj = vec![0u64; a + b];
        let row = low_mask(b);
        for (i, slot) in adj.iter_mut().enumerate().take(a) {
            let bits = (mask >> (i * b)) & row;
            *slot = bits << a;
        }
        for i in 0..a {
            for v in members(adj[i]) {
                adj[v] |= bit(i);
            }
        }
        Ok(Self { a, b, adj })
    }

    pub fn edge_mask(&self) -> Result<u64, GraphError> {
        if self.a * self.b > 64 {
            return Err(GraphError::EdgeMaskTooWide(self.a * self.b));
        }
        let mut mask = 0u64;
        for i in 0..self.a {
            mask |= (self.adj[i] >> self.a) << (i * self.b);
        }
        Ok(mask)
    }

    pub fn a_size(&self) -> usize {
        self.a
    }

    pub fn b_size(&self) -> usize {
        self.b
    }

    pub fn order(&self) -> usize {
        self.a + self.b
    }

    pub fn is_in_a(&self, v: usize) -> bool {
        v < self.a
    }

    pub fn class_a(&self) -> VertexSet {
        low_mask(self.a)
    }

    pub fn class_b(&self) -> VertexSet {
        low_mask(self.a + self.b) & !low_mask(self.a)
    }

    pub fn vertices(&self) -> VertexSet {
        low_mask(self.a + self.b)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u] & bit(v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.a].iter().map(|row| row.count_ones() as usize).sum()
    }

    /// Edges as `(A-vertex, B-vertex)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.a).flat_map(move |u| members(self.adj[u]).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder { graph: self.clone() }
    }

    /// Subgraph induced by `keep`, reindexed so that kept A-vertices come
    /// first (in their original order) followed by kept B-vertices.
    pub fn induced_subgraph(&self, keep: VertexSet) -> BipartiteGraph {
        let keep = keep & self.vertices();
        let kept: Vec<usize> = members(keep).collect();
        let new_a = kept.iter().filter(|&&v| v < self.a).count();
        let new_b = kept.len() - new_a;
        let mut index = [usize::MAX; MAX_VERTICES];
        for (new, &old) in kept.iter().enumerate() {
            index[old] = new;
        }
        let adj = kept
            .iter()
            .map(|&old| members(self.adj[old] & keep).fold(0u64, |acc, w| acc | bit(index[w])))
            .collect();
        BipartiteGraph {
            a: new_a,
            b: new_b,
            adj,
        }
    }

    /// The same graph with the roles of A and B exchanged.
    pub fn swap_classes(&self) -> BipartiteGraph {
        let (a, b) = (self.a, self.b);
        let relabel = |v: usize| if v < a { v + b } else { v - a };
        let mut adj = vec![0u64; a + b];
        for (u, v) in self.edges() {
            let (nu, nv) = (relabel(u), relabel(v));
            adj[nu] |= bit(nv);
            adj[nv] |= bit(nu);
        }
        BipartiteGraph { a: b, b: a, adj }
    }

    /// Applies a class-preserving relabeling; `perm[v]` is the new index of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<BipartiteGraph, GraphError> {
        let mut builder = GraphBuilder::new(self.a, self.b)?;
        for (u, v) in self.edges() {
            builder.add_edge(perm[u], perm[v])?;
        }
        Ok(builder.build())
    }

    /// graph6 encoding (no `>>graph6<<` header, no trailing newline).
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = String::new();
        encode_order(n, &mut out);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                filled += 1;
                if filled == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            acc <<= 6 - filled;
            out.push((acc + 63) as char);
        }
        out
    }

    /// Decodes graph6 and checks that the declared split `a_size` is a
    /// valid bipartition with classes `0..a_size` and `a_size..n`.
    pub fn from_graph6(bytes: &[u8], a_size: usize) -> Result<BipartiteGraph, GraphError> {
        let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
        let bytes = trim_ascii(bytes);
        let (n, body) = decode_order(bytes)?;
        if a_size > n {
            return Err(GraphError::MalformedGraph6(format!(
                "declared |A| = {a_size} exceeds the vertex count {n}"
            )));
        }
        check_order(a_size, n - a_size)?;
        let pairs = n * n.saturating_sub(1) / 2;
        let needed = pairs.div_ceil(6);
        if body.len() != needed {
            return Err(GraphError::MalformedGraph6(format!(
                "expected {needed} data bytes for {n} vertices, found {}",
                body.len()
            )));
        }
        let mut bits = Vec::with_capacity(needed * 6);
        for &byte in body {
            if !(63..=126).contains(&byte) {
                return Err(GraphError::MalformedGraph6(format!(
                    "byte {byte:#04x} outside the printable range"
                )));
            }
            let x = byte - 63;
            bits.extend((0..6).rev().map(|s| (x >> s) & 1 == 1));
        }
        if bits[pairs..].iter().any(|&b| b) {
            return Err(GraphError::MalformedGraph6("nonzero padding bits".to_string()));
        }
        let mut builder = GraphBuilder::new(a_size, n - a_size)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] {
                    if (i < a_size) == (j < a_size) {
                        return Err(GraphError::NotBipartite { u: i, v: j, a_size });
                    }
                    builder.add_edge(i, j)?;
                }
                k += 1;
            }
        }
        Ok(builder.build())
    }

    /// Graphviz export; class A and class B are placed in separate ranks.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n  rankdir=LR;\n");
        let rank = |out: &mut String, range: std::ops::Range<usize>, prefix: char| {
            out.push_str("  { rank=same;");
            for v in range {
                let _ = write!(out, " {v} [label=\"{prefix}{v}\"];");
            }
            out.push_str(" }\n");
        };
        rank(&mut out, 0..self.a, 'a');
        rank(&mut out, self.a..self.a + self.b, 'b');
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

fn trim_ascii(mut bytes: &[u8]) -> &[u8] {
    while let [rest @ .., last] = bytes {
        if last.is_ascii_whitespace() {
            bytes = rest;
        } else {
            break;
        }
    }
    while let [first, rest @ ..] = bytes {
        if first.is_ascii_whitespace() {
            bytes = rest;
        } else {
            break;
        }
    }
    bytes
}

fn encode_order(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    match bytes {
        [] => Err(GraphError::MalformedGraph6("empty input".into())),
        [126, 126, ..] => Err(GraphError::MalformedGraph6(
            "orders above 258047 are not supported".into(),
        )),
        [126, x, y, z, rest @ ..] => {
            let mut n = 0usize;
            for &c in [x, y, z] {
                if !(63..=126).contains(&c) {
                    return Err(GraphError::MalformedGraph6("bad order bytes".into()));
                }
                n = (n << 6) | (c - 63) as usize;
            }
            Ok((n, rest))
        }
        [126, ..] => Err(GraphError::MalformedGraph6("truncated order".into())),
        [c, rest @ ..] if (63..=125).contains(c) => Ok(((c - 63) as usize, rest)),
        [c, ..] => Err(GraphError::MalformedGraph6(format!(
            "byte {c:#04x} is not a valid order byte"
        ))),
    }
}

/// Single-owner mutable edge set that finalizes into a [`BipartiteGraph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    graph: BipartiteGraph,
}

impl GraphBuilder {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        Ok(Self {
            graph: BipartiteGraph::empty(a, b)?,
        })
    }

    /// Adds the edge `{u, v}`. Either endpoint may come first, but one must
    /// be in A and the other in B. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        let (a, n) = (self.graph.a, self.graph.order());
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange {
                    vertex: w,
                    class: if w < a { 'A' } else { 'B' },
                    size: if w < a { a } else { self.graph.b },
                });
            }
        }
        if (u < a) == (v < a) {
            return Err(GraphError::SameClass(u, v));
        }
        self.graph.adj[u] |= bit(v);
        self.graph.adj[v] |= bit(u);
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> &mut Self {
        if u < self.graph.order() && v < self.graph.order() {
            self.graph.adj[u] &= !bit(v);
            self.graph.adj[v] &= !bit(u);
        }
        self
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn build(self) -> BipartiteGraph {
        self.graph
    }
}

/// Sidecar record used wherever a graph leaves the process as JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph6Record {
    pub a_size: usize,
    pub b_size: usize,
    pub edge_count: usize,
    pub graph6: String,
}

impl From<&BipartiteGraph> for Graph6Record {
    fn from(g: &BipartiteGraph) -> Self {
        Self {
            a_size: g.a_size(),
            b_size: g.b_size(),
            edge_count: g.edge_count(),
            graph6: g.to_graph6(),
        }
    }
}

impl Graph6Record {
    pub fn decode(&self) -> Result<BipartiteGraph, GraphError> {
        let g = BipartiteGraph::from_graph6(self.graph6.as_bytes(), self.a_size)?;
        if g.b_size() != self.b_size {
            return Err(GraphError::MalformedGraph6(format!(
                "record says |B| = {}, graph6 implies {}",
                self.b_size,
                g.b_size()
            )));
        }
        Ok(g)
    }
}
