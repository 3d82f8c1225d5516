//! Connectivity classification and block decomposition.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bit, members, BipartiteGraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("block decomposition requires a connected graph")]
    Disconnected,
}

/// Vertices reachable from `start` using only vertices in `within`.
pub fn reachable_within(g: &BipartiteGraph, start: usize, within: VertexSet) -> VertexSet {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in members(frontier) {
            next |= g.neighbors(v);
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Vertex sets of the connected components, ordered by smallest member.
pub fn connected_components(g: &BipartiteGraph) -> Vec<VertexSet> {
    let mut left = g.vertices();
    let mut comps = Vec::new();
    while left != 0 {
        let v = left.trailing_zeros() as usize;
        let comp = reachable_within(g, v, left);
        comps.push(comp);
        left &= !comp;
    }
    comps
}

/// The empty graph and the one-vertex graph count as connected.
pub fn is_connected(g: &BipartiteGraph) -> bool {
    let all = g.vertices();
    if all == 0 {
        return true;
    }
    reachable_within(g, 0, all) == all
}

pub fn is_two_connected(g: &BipartiteGraph) -> bool {
    g.order() >= 3 && is_connected(g) && articulation_points(g) == 0
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Sorted vertex lists, one per block, in lexicographic order.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// `(block index, cut vertex)` incidences.
    pub block_cut_tree: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    pub fn block_set(&self, index: usize) -> VertexSet {
        self.blocks[index].iter().fold(0, |acc, &v| acc | bit(v))
    }

    /// Edges of `g` belonging to block `index`.
    pub fn block_edges(&self, g: &BipartiteGraph, index: usize) -> Vec<(usize, usize)> {
        let set = self.block_set(index);
        g.edges()
            .filter(|&(u, v)| set & bit(u) != 0 && set & bit(v) != 0)
            .collect()
    }

    pub fn is_bridge(&self, index: usize) -> bool {
        self.blocks[index].len() == 2
    }
}

struct Lowpoint<'g> {
    g: &'g BipartiteGraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
}

impl Lowpoint<'_> {
    fn visit(&mut self, v: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        let mut children = 0;
        for w in members(self.g.neighbors(v)) {
            if self.disc[w] == 0 {
                children += 1;
                self.edge_stack.push((v, w));
                self.visit(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent.is_some() || children > 1 {
                        self.cuts |= bit(v);
                    }
                    let mut block = 0;
                    while let Some((x, y)) = self.edge_stack.pop() {
                        block |= bit(x) | bit(y);
                        if (x, y) == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[v] {
                self.edge_stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        if parent.is_none() && children == 0 {
            self.blocks.push(bit(v));
        }
    }
}

fn lowpoint(g: &BipartiteGraph) -> Lowpoint<'_> {
    let n = g.order();
    let mut state = Lowpoint {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        cuts: 0,
    };
    for v in 0..n {
        if state.disc[v] == 0 {
            state.visit(v, None);
        }
    }
    state
}

pub fn articulation_points(g: &BipartiteGraph) -> VertexSet {
    lowpoint(g).cuts
}

/// Blocks (maximal 2-connected subgraphs and bridges) of a connected graph.
///
/// An isolated vertex forms a one-vertex block so that every vertex is
/// covered; the empty graph has no blocks.
pub fn block_decomposition(g: &BipartiteGraph) -> Result<BlockDecomposition, StructureError> {
    if !is_connected(g) {
        return Err(StructureError::Disconnected);
    }
    let state = lowpoint(g);
    let mut blocks: Vec<Vec<usize>> = state.blocks.iter().map(|&s| members(s).collect()).collect();
    blocks.sort();
    let cut_vertices: Vec<usize> = members(state.cuts).collect();
    let mut block_cut_tree = Vec::new();
    for (i, block) in blocks.iter().enumerate() {
        for &v in block {
            if state.cuts & bit(v) != 0 {
                block_cut_tree.push((i, v));
            }
        }
    }
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        block_cut_tree,
    })
}
