//! Exact longest-path and circumference search, forbidden-subgraph
//! predicates, and tools for working with maximal paths (degree-sum cycle
//! bound, interval-neighborhood configuration).
//!
//! The engine is a depth-first enumeration of simple paths with three cuts:
//!
//! * a reachability bound: the head can only be extended through vertices
//!   reachable from it in the unvisited part of the graph;
//! * an alternation bound: within that reachable set the path alternates
//!   classes, so it gains at most `2 * min + 1` more vertices;
//! * twin symmetry: among unvisited vertices with identical neighborhoods
//!   only the one with the smallest index is tried.
//!
//! Every search runs to completion or fails with [`SearchError::BudgetExhausted`];
//! a partial result is never returned as if it were exact.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bit, low_mask, members, BipartiteGraph, VertexSet};
use crate::structure::{connected_components, is_two_connected, reachable_within};

pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget exhausted before optimality was proven")]
    BudgetExhausted,
    #[error("vertex sequence is not a path in the graph")]
    InvalidPath,
    #[error("path is not maximal: an endpoint has a neighbor off the path")]
    NotMaximal,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("length parameter {0} is outside the allowed range")]
    InvalidLength(usize),
}

/// Wall-clock limit for a search. The deadline is fixed when the budget is
/// created, so one budget can be shared by many calls.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn new(limit: Duration) -> Self {
        Self {
            deadline: Instant::now().checked_add(limit),
        }
    }

    pub fn unlimited() -> Self {
        Self { deadline: None }
    }

    pub fn deadline(&self) -> Option<Instant> {
        self.deadline
    }

    pub fn is_exhausted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}

/// An explicit path `v_1 … v_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
}

impl PathWitness {
    pub fn new(vertices: Vec<usize>) -> Self {
        Self { vertices }
    }

    /// Number of vertices on the path.
    pub fn m(&self) -> usize {
        self.vertices.len()
    }

    pub fn first(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.vertices.last().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().fold(0, |acc, &v| acc | bit(v))
    }

    /// Distinct vertices, consecutive ones adjacent. Alternation of classes
    /// follows from adjacency in a bipartite graph.
    pub fn is_path_in(&self, g: &BipartiteGraph) -> bool {
        let n = g.order();
        let mut seen = 0u64;
        for &v in &self.vertices {
            if v >= n || seen & bit(v) != 0 {
                return false;
            }
            seen |= bit(v);
        }
        self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// Neither endpoint has a neighbor off the path.
    pub fn is_maximal_in(&self, g: &BipartiteGraph) -> bool {
        let on = self.vertex_set();
        match (self.first(), self.last()) {
            (Some(u), Some(v)) => g.neighbors(u) & !on == 0 && g.neighbors(v) & !on == 0,
            _ => false,
        }
    }

    fn position_of(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    /// `N⁺(v_m)`: successors along the path of the last vertex's neighbors.
    pub fn successors_of_last_neighbors(&self, g: &BipartiteGraph) -> Vec<usize> {
        let Some(last) = self.last() else {
            return Vec::new();
        };
        self.shifted(g, last, 1)
    }

    /// `N⁻(v_1)`: predecessors along the path of the first vertex's neighbors.
    pub fn predecessors_of_first_neighbors(&self, g: &BipartiteGraph) -> Vec<usize> {
        let Some(first) = self.first() else {
            return Vec::new();
        };
        self.shifted(g, first, -1)
    }

    /// `N⁺⁺(v_m)`: vertices two steps further along than neighbors of `v_m`.
    pub fn second_successors_of_last_neighbors(&self, g: &BipartiteGraph) -> Vec<usize> {
        let Some(last) = self.last() else {
            return Vec::new();
        };
        self.shifted(g, last, 2)
    }

    fn shifted(&self, g: &BipartiteGraph, end: usize, offset: isize) -> Vec<usize> {
        let nbrs = g.neighbors(end);
        let m = self.vertices.len() as isize;
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, &w)| nbrs & bit(w) != 0)
            .filter_map(|(pos, _)| {
                let target = pos as isize + offset;
                (0..m).contains(&target).then(|| self.vertices[target as usize])
            })
            .collect()
    }
}

/// A cycle given by its vertices in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_cycle_in(&self, g: &BipartiteGraph) -> bool {
        let n = self.vertices.len();
        n >= 4
            && n.is_multiple_of(2)
            && PathWitness::new(self.vertices.clone()).is_path_in(g)
            && g.has_edge(self.vertices[n - 1], self.vertices[0])
    }
}

/// Same class, same neighborhood, smaller index.
fn lower_twins(g: &BipartiteGraph) -> Vec<VertexSet> {
    let n = g.order();
    let a = g.class_a();
    (0..n)
        .map(|v| {
            let class = if a & bit(v) != 0 { a } else { g.class_b() };
            members(class & low_mask(v))
                .filter(|&w| g.neighbors(w) == g.neighbors(v))
                .fold(0, |acc, w| acc | bit(w))
        })
        .collect()
}

/// Largest number of extra vertices an alternating walk can add after a head
/// whose neighbors lie in the class with `next` free vertices, when the
/// head's own class has `same` free vertices.
#[inline]
fn alternation_gain(next: usize, same: usize) -> usize {
    if next > same {
        2 * same + 1
    } else {
        2 * next
    }
}

/// Longest alternating vertex sequence inside a vertex set with the given
/// class counts.
#[inline]
fn alternation_cap(in_a: usize, in_b: usize) -> usize {
    if in_a == in_b {
        2 * in_a
    } else {
        2 * in_a.min(in_b) + 1
    }
}

struct Engine<'g> {
    g: &'g BipartiteGraph,
    twins: Vec<VertexSet>,
    deadline: Option<Instant>,
    ticks: u32,
    allowed: VertexSet,
    /// When set, a path only counts if it ends in this set (closing a cycle
    /// through the root).
    closers: Option<VertexSet>,
    stack: Vec<usize>,
    best: Vec<usize>,
    target: usize,
}

impl<'g> Engine<'g> {
    fn new(g: &'g BipartiteGraph, budget: Budget, target: usize) -> Self {
        Self {
            g,
            twins: lower_twins(g),
            deadline: budget.deadline(),
            ticks: 0,
            allowed: g.vertices(),
            closers: None,
            stack: Vec::with_capacity(g.order()),
            best: Vec::new(),
            target,
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), SearchError> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks & 0xfff == 1 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(SearchError::BudgetExhausted);
                }
            }
        }
        Ok(())
    }

    /// Returns `true` once the target length has been reached.
    fn grow(&mut self, head: usize, visited: VertexSet) -> Result<bool, SearchError> {
        self.tick()?;
        let len = self.stack.len();
        let counts = match self.closers {
            None => true,
            Some(c) => len >= 3 && c & bit(head) != 0,
        };
        if counts && len > self.best.len() {
            self.best.clone_from(&self.stack);
            if len >= self.target {
                return Ok(true);
            }
        }

        let free = self.allowed & !visited;
        let cands = self.g.neighbors(head) & free;
        if cands == 0 {
            return Ok(false);
        }
        let reach = reachable_within(self.g, head, free | bit(head)) & !bit(head);
        if let Some(c) = self.closers {
            if reach & c == 0 {
                return Ok(false);
            }
        }
        let in_a = (reach & self.g.class_a()).count_ones() as usize;
        let in_b = (reach & self.g.class_b()).count_ones() as usize;
        let mut gain = if self.g.is_in_a(head) {
            alternation_gain(in_b, in_a)
        } else {
            alternation_gain(in_a, in_b)
        };
        if self.closers.is_some() && (len + gain) % 2 == 1 {
            gain -= 1;
        }
        if len + gain <= self.best.len() {
            return Ok(false);
        }

        for v in members(cands) {
            if self.twins[v] & free != 0 {
                continue;
            }
            self.stack.push(v);
            let done = self.grow(v, visited | bit(v))?;
            self.stack.pop();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn component_caps(&self) -> Vec<(VertexSet, usize)> {
        connected_components(self.g)
            .into_iter()
            .map(|comp| {
                let in_a = (comp & self.g.class_a()).count_ones() as usize;
                let in_b = (comp & self.g.class_b()).count_ones() as usize;
                (comp, alternation_cap(in_a, in_b))
            })
            .collect()
    }

    /// Longest path, stopping early once `target` vertices are reached.
    fn run_paths(&mut self) -> Result<(), SearchError> {
        let caps = self.component_caps();
        let global = caps.iter().map(|&(_, c)| c).max().unwrap_or(0);
        self.target = self.target.min(global);
        if self.g.order() == 0 {
            return Ok(());
        }
        self.best = vec![0];
        if self.best.len() >= self.target {
            return Ok(());
        }
        for s in 0..self.g.order() {
            if self.twins[s] != 0 {
                continue;
            }
            let cap = caps.iter().find(|(comp, _)| comp & bit(s) != 0).map_or(0, |&(_, c)| c);
            if cap <= self.best.len() {
                continue;
            }
            self.stack.clear();
            self.stack.push(s);
            if self.grow(s, bit(s))? {
                break;
            }
        }
        Ok(())
    }

    /// Longest cycle, enumerated by its smallest vertex `s`: a path from `s`
    /// through larger vertices that ends at a neighbor of `s`.
    fn run_cycles(&mut self) -> Result<(), SearchError> {
        let n = self.g.order();
        for s in 0..n {
            if self.twins[s] != 0 {
                continue;
            }
            let allowed = self.g.vertices() & !low_mask(s);
            let closers = self.g.neighbors(s) & allowed;
            if closers.count_ones() < 2 {
                continue;
            }
            let comp = reachable_within(self.g, s, allowed);
            let in_a = (comp & self.g.class_a()).count_ones() as usize;
            let in_b = (comp & self.g.class_b()).count_ones() as usize;
            if 2 * in_a.min(in_b) <= self.best.len() {
                continue;
            }
            self.allowed = allowed;
            self.closers = Some(closers);
            self.stack.clear();
            self.stack.push(s);
            if self.grow(s, bit(s))? {
                break;
            }
        }
        Ok(())
    }
}

/// Maximum number of vertices on a path in `g`, with a witness.
pub fn longest_path_vertices(g: &BipartiteGraph, budget: Budget) -> Result<(usize, PathWitness), SearchError> {
    let mut engine = Engine::new(g, budget, usize::MAX);
    engine.run_paths()?;
    let best = std::mem::take(&mut engine.best);
    Ok((best.len(), PathWitness::new(best)))
}

/// Length of a longest cycle (0 for a forest) with a witness when nonzero.
pub fn circumference(g: &BipartiteGraph, budget: Budget) -> Result<(usize, Option<CycleWitness>), SearchError> {
    let cap = 2 * g.a_size().min(g.b_size());
    let mut engine = Engine::new(g, budget, cap.max(1));
    engine.run_cycles()?;
    let best = std::mem::take(&mut engine.best);
    if best.is_empty() {
        Ok((0, None))
    } else {
        Ok((best.len(), Some(CycleWitness { vertices: best })))
    }
}

/// True iff `g` has no path on `k` vertices.
pub fn is_path_free(g: &BipartiteGraph, k: usize, budget: Budget) -> Result<bool, SearchError> {
    if k == 0 {
        return Err(SearchError::InvalidLength(k));
    }
    let mut engine = Engine::new(g, budget, k);
    engine.run_paths()?;
    Ok(engine.best.len() < k)
}

/// A path on `k` vertices if one exists.
pub fn find_path_on(g: &BipartiteGraph, k: usize, budget: Budget) -> Result<Option<PathWitness>, SearchError> {
    if k == 0 {
        return Err(SearchError::InvalidLength(k));
    }
    let mut engine = Engine::new(g, budget, k);
    engine.run_paths()?;
    Ok((engine.best.len() >= k).then(|| PathWitness::new(engine.best)))
}

/// True iff `g` has no cycle of length at least `2 * half_length`.
pub fn is_long_cycle_free(g: &BipartiteGraph, half_length: usize, budget: Budget) -> Result<bool, SearchError> {
    if half_length < 2 {
        return Err(SearchError::InvalidLength(half_length));
    }
    let mut engine = Engine::new(g, budget, 2 * half_length);
    engine.run_cycles()?;
    Ok(engine.best.len() < 2 * half_length)
}

/// Greedily extends `seed` until neither endpoint has a neighbor off the
/// path: first at the tail, then at the front, always taking the
/// smallest-index available neighbor.
pub fn extend_to_maximal_path(g: &BipartiteGraph, seed: &PathWitness) -> Result<PathWitness, SearchError> {
    if seed.vertices.is_empty() || !seed.is_path_in(g) {
        return Err(SearchError::InvalidPath);
    }
    let mut path = seed.vertices.clone();
    let mut on = seed.vertex_set();
    while let Some(&tail) = path.last() {
        let open = g.neighbors(tail) & !on;
        if open == 0 {
            break;
        }
        let next = open.trailing_zeros() as usize;
        path.push(next);
        on |= bit(next);
    }
    let mut front = Vec::new();
    let mut head = path[0];
    loop {
        let open = g.neighbors(head) & !on;
        if open == 0 {
            break;
        }
        head = open.trailing_zeros() as usize;
        front.push(head);
        on |= bit(head);
    }
    front.reverse();
    front.extend(path);
    Ok(PathWitness::new(front))
}

/// `min{m − ε, 2(d(u) + d(v) − 1 − ε)}` with `ε = 1` for odd `m`, else 0.
pub fn jackson_value(m: usize, deg_first: usize, deg_last: usize) -> usize {
    let odd = m % 2;
    let by_length = m.saturating_sub(odd);
    let by_degree = 2 * (deg_first + deg_last).saturating_sub(1 + odd);
    by_length.min(by_degree)
}

/// Guaranteed cycle length from a maximal path in a 2-connected graph.
pub fn jackson_bound(g: &BipartiteGraph, path: &PathWitness) -> Result<usize, SearchError> {
    check_maximal(g, path)?;
    if !is_two_connected(g) {
        return Err(SearchError::NotTwoConnected);
    }
    let (u, v) = (path.vertices[0], path.vertices[path.m() - 1]);
    Ok(jackson_value(path.m(), g.degree(u), g.degree(v)))
}

fn check_maximal(g: &BipartiteGraph, path: &PathWitness) -> Result<(), SearchError> {
    if path.vertices.is_empty() || !path.is_path_in(g) {
        return Err(SearchError::InvalidPath);
    }
    if !path.is_maximal_in(g) {
        return Err(SearchError::NotMaximal);
    }
    Ok(())
}

/// The two-interval endpoint configuration on an odd maximal path.
///
/// All four fields are 1-based positions along the path (`v_1 … v_m`), with
/// `2 < j ≤ j' < i' ≤ i < m`, and
///
/// ```text
/// N(v_1) = {v_2 … v_j} ∪ {v_i' … v_i}
/// N(v_m) = {v_j … v_j'} ∪ {v_i … v_{m-1}}
/// ```
///
/// where each interval is restricted to the even positions (the color class
/// opposite the endpoints).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JacksonConfig {
    pub i: usize,
    pub j: usize,
    pub i_prime: usize,
    pub j_prime: usize,
}

fn even_positions(lo: usize, hi: usize) -> u64 {
    (lo..=hi).filter(|p| p % 2 == 0).fold(0, |acc, p| acc | bit(p))
}

/// Detects [`JacksonConfig`] on a maximal path. Among pairs `(i', j')` of
/// minimal gap the lexicographically smallest `(j', i')` is reported.
pub fn detect_jackson_config(g: &BipartiteGraph, path: &PathWitness) -> Result<Option<JacksonConfig>, SearchError> {
    check_maximal(g, path)?;
    let m = path.m();
    if m.is_multiple_of(2) || m < 3 {
        return Ok(None);
    }
    let first = path.vertices[0];
    let last = path.vertices[m - 1];
    // positions are 1-based; bit p set means v_p is a neighbor
    let positions = |end: usize| {
        members(g.neighbors(end)).fold(0u64, |acc, w| {
            acc | bit(path.position_of(w).expect("maximal path holds all neighbors") + 1)
        })
    };
    let first_nbrs = positions(first);
    let last_nbrs = positions(last);
    let i = 63 - first_nbrs.leading_zeros() as usize;
    let j = last_nbrs.trailing_zeros() as usize;

    let mut pair: Option<(usize, usize)> = None;
    for jp in members(last_nbrs) {
        for ip in members(first_nbrs) {
            if ip <= jp {
                continue;
            }
            let better = match pair {
                None => true,
                Some((bj, bi)) => ip - jp < bi - bj,
            };
            if better {
                pair = Some((jp, ip));
            }
        }
    }
    let Some((j_prime, i_prime)) = pair else {
        return Ok(None);
    };
    if !(2 < j && j <= j_prime && j_prime < i_prime && i_prime <= i && i < m) {
        return Ok(None);
    }
    let want_first = even_positions(2, j) | even_positions(i_prime, i);
    let want_last = even_positions(j, j_prime) | even_positions(i, m - 1);
    if first_nbrs == want_first && last_nbrs == want_last {
        Ok(Some(JacksonConfig { i, j, i_prime, j_prime }))
    } else {
        Ok(None)
    }
}
