//! Bitset graphs on at most 64 vertices and their exact invariants.
//!
//! Every vertex `v` owns one `u64` row whose set bits are its neighbours.
//! All set-valued arguments are [`VertexSet`] masks in the graph's own
//! labeling, so the solvers below can work on induced subgraphs without
//! relabeling.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GraphError;

/// Largest vertex count a [`Graph`] can hold (one machine word per row).
pub const MAX_VERTICES: usize = 64;

#[inline]
const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex indices packed into a single word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest vertex in the set.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Every subset of `self`, in decreasing numeric order of the mask,
    /// starting with `self` and ending with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(self.0),
        }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let vertices = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = vertices.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} exceeds the {MAX_VERTICES}-vertex cap"
            )));
        }
        Ok(vertices.into_iter().collect())
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
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

impl ExactSizeIterator for VertexIter {}

pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    #[inline]
    fn next(&mut self) -> Option<VertexSet> {
        let current = self.next?;
        self.next = if current == 0 {
            None
        } else {
            Some((current - 1) & self.universe)
        };
        Some(VertexSet(current))
    }
}

/// Clique number, stability number and chromatic number of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTriple {
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse into one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, cap: MAX_VERTICES });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, &[])
    }

    /// Builds a graph from raw adjacency rows, checking symmetry, loops and
    /// out-of-range bits.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, cap: MAX_VERTICES });
        }
        let full = low_bits(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: 63 - (row & !full).leading_zeros() as usize,
                    n,
                });
            }
            if row & (1 << v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in VertexSet(row).iter() {
                if rows[u] & (1 << v) == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 0..self.n {
            for u in VertexSet(self.adj[v] & low_bits(v)).iter() {
                out.push((u, v));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn complement(&self) -> Graph {
        let full = low_bits(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &row)| !row & full & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union: `self` keeps labels `0..n`, `other` is shifted past it.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, cap: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Ok(Graph { n, adj })
    }

    /// Subgraph induced by `s`, relabeled by increasing original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let s = s.intersection(self.vertices());
        let members: Vec<usize> = s.iter().collect();
        let adj = members
            .iter()
            .map(|&v| {
                let row = self.adj[v] & s.bits();
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| row & (1 << u) != 0)
                    .fold(0u64, |acc, (i, _)| acc | (1 << i))
            })
            .collect();
        Graph {
            n: members.len(),
            adj,
        }
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.n);
        let mut position = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v])
                    .iter()
                    .fold(0u64, |acc, u| acc | (1 << position[u]))
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// `(N(v), M(v))`: neighbours and non-neighbours of `v`.
    pub fn neighborhoods(&self, v: usize) -> Result<(VertexSet, VertexSet), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let nbrs = self.neighbors(v);
        let non = self.vertices().difference(nbrs).without(v);
        Ok((nbrs, non))
    }

    pub fn is_stable_set(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(VertexSet(self.adj[v])))
    }

    /// True when `G[s]` is connected. The empty set counts as connected.
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        let Some(start) = s.first() else {
            return true;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            frontier = VertexSet(next & s.bits()).difference(seen);
            seen = seen.union(frontier);
        }
        seen == s
    }

    pub fn invariants(&self) -> InvariantTriple {
        let all = self.vertices();
        InvariantTriple {
            omega: self.clique_number_in(all),
            alpha: self.stability_number_in(all),
            chi: self.chromatic_number_in(all),
        }
    }

    pub fn clique_number(&self) -> usize {
        self.clique_number_in(self.vertices())
    }

    pub fn stability_number(&self) -> usize {
        self.stability_number_in(self.vertices())
    }

    pub fn chromatic_number(&self) -> usize {
        self.chromatic_number_in(self.vertices())
    }

    /// ω(G[s]).
    pub fn clique_number_in(&self, s: VertexSet) -> usize {
        self.maximum_clique_in(s).len()
    }

    /// α(G[s]), computed as the clique number of the complement.
    pub fn stability_number_in(&self, s: VertexSet) -> usize {
        if s.is_empty() {
            return 0;
        }
        self.complement().clique_number_in(s)
    }

    /// A maximum clique of `G[s]`; among equal sizes, the first one found.
    pub fn maximum_clique_in(&self, s: VertexSet) -> VertexSet {
        let mut search = CliqueSearch {
            adj: &self.adj,
            best: VertexSet::EMPTY,
        };
        search.expand(VertexSet::EMPTY, s.intersection(self.vertices()));
        search.best
    }

    /// χ(G[s]).
    pub fn chromatic_number_in(&self, s: VertexSet) -> usize {
        let colors = self.optimal_coloring_in(s);
        colors.iter().map(|&(_, c)| c + 1).max().unwrap_or(0)
    }

    /// An optimal proper coloring of `G[s]` as `(vertex, color)` pairs in
    /// increasing vertex order. Colors are `0..χ` and all of them are used.
    pub fn optimal_coloring_in(&self, s: VertexSet) -> Vec<(usize, usize)> {
        let s = s.intersection(self.vertices());
        if s.is_empty() {
            return Vec::new();
        }
        let lower = self.clique_number_in(s);
        let mut solver = ColoringSearch::new(self, s);
        let greedy = solver.dsatur_greedy();
        solver.best_count = greedy.iter().map(|&c| c + 1).max().unwrap_or(0);
        solver.best = greedy;
        if solver.best_count > lower {
            solver.lower = lower;
            solver.branch(0);
        }
        solver
            .vertices
            .iter()
            .zip(solver.best.iter())
            .map(|(&v, &c)| (v, c))
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Branch and bound over candidate masks, bounded by a greedy coloring of
/// the candidates.
struct CliqueSearch<'a> {
    adj: &'a [u64],
    best: VertexSet,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: VertexSet, mut candidates: VertexSet) {
        if candidates.is_empty() {
            if current.len() > self.best.len() {
                self.best = current;
            }
            return;
        }
        let (order, bounds) = self.color_bound(candidates);
        for i in (0..order.len()).rev() {
            if current.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.expand(
                current.with(v),
                candidates.intersection(VertexSet(self.adj[v])),
            );
            candidates = candidates.without(v);
        }
    }

    /// Greedy sequential coloring of `candidates`; `bounds[i]` is the color
    /// count used by `order[..=i]`.
    fn color_bound(&self, candidates: VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(candidates.len());
        let mut bounds = Vec::with_capacity(candidates.len());
        let mut uncolored = candidates.bits();
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut available = uncolored;
            while available != 0 {
                let v = available.trailing_zeros() as usize;
                available &= !(1 << v) & !self.adj[v];
                uncolored &= !(1 << v);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }
}

/// Exact coloring by saturation-ordered branching (DSATUR style).
struct ColoringSearch<'a> {
    graph: &'a Graph,
    vertices: Vec<usize>,
    /// Local index of each vertex of the graph, `usize::MAX` if outside.
    local: Vec<usize>,
    colors: Vec<Option<usize>>,
    best: Vec<usize>,
    best_count: usize,
    lower: usize,
}

impl<'a> ColoringSearch<'a> {
    fn new(graph: &'a Graph, s: VertexSet) -> Self {
        let vertices: Vec<usize> = s.iter().collect();
        let mut local = vec![usize::MAX; graph.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let len = vertices.len();
        ColoringSearch {
            graph,
            vertices,
            local,
            colors: vec![None; len],
            best: Vec::new(),
            best_count: usize::MAX,
            lower: 0,
        }
    }

    /// Colors already used by the neighbours of local vertex `i`.
    fn neighbor_colors(&self, i: usize) -> u64 {
        let v = self.vertices[i];
        let mut used = 0u64;
        for u in self.graph.neighbors(v).iter() {
            let j = self.local[u];
            if j != usize::MAX {
                if let Some(c) = self.colors[j] {
                    used |= 1 << c;
                }
            }
        }
        used
    }

    /// Uncolored vertex of maximum saturation, ties broken by degree in
    /// the subgraph and then by lowest index.
    fn pick(&self) -> Option<usize> {
        let mut choice: Option<(u32, usize, usize)> = None;
        for i in 0..self.vertices.len() {
            if self.colors[i].is_some() {
                continue;
            }
            let sat = self.neighbor_colors(i).count_ones();
            let deg = self
                .graph
                .neighbors(self.vertices[i])
                .iter()
                .filter(|&u| self.local[u] != usize::MAX)
                .count();
            let better = match choice {
                None => true,
                Some((s, d, _)) => sat > s || (sat == s && deg > d),
            };
            if better {
                choice = Some((sat, deg, i));
            }
        }
        choice.map(|(_, _, i)| i)
    }

    fn dsatur_greedy(&mut self) -> Vec<usize> {
        while let Some(i) = self.pick() {
            let used = self.neighbor_colors(i);
            self.colors[i] = Some((!used).trailing_zeros() as usize);
        }
        let out = self.colors.iter().map(|c| c.unwrap()).collect();
        self.colors.iter_mut().for_each(|c| *c = None);
        out
    }

    /// Returns true once an optimal coloring (matching the lower bound) is
    /// recorded.
    fn branch(&mut self, used_colors: usize) -> bool {
        let Some(i) = self.pick() else {
            if used_colors < self.best_count {
                self.best_count = used_colors;
                self.best = self.colors.iter().map(|c| c.unwrap()).collect();
            }
            return self.best_count <= self.lower;
        };
        let forbidden = self.neighbor_colors(i);
        // a fresh color is only worth trying if it still beats the incumbent
        let limit = (used_colors + 1).min(self.best_count - 1);
        for c in 0..limit {
            if forbidden & (1 << c) != 0 {
                continue;
            }
            self.colors[i] = Some(c);
            let next_used = used_colors.max(c + 1);
            if self.branch(next_used) {
                self.colors[i] = None;
                return true;
            }
        }
        self.colors[i] = None;
        false
    }
}
