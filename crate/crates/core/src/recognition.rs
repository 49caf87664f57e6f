//! Named graph families, induced-subgraph containment and perfect-graph
//! recognition.

use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

/// Named graphs built by [`make_family`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// P_n: path on `n` vertices.
    Path(usize),
    /// C_n, `n >= 3`.
    Cycle(usize),
    /// K_n.
    Complete(usize),
    /// K_n^C: `n` isolated vertices.
    EmptyGraph(usize),
    /// pK₂: `p` disjoint edges.
    Matching(usize),
    /// H ∪ K₁, with the extra vertex last.
    UnionWithK1(Box<Family>),
    /// H ∪ K₂, with the extra edge last.
    UnionWithK2(Box<Family>),
}

impl Family {
    pub fn build(&self) -> Result<Graph, GraphError> {
        make_family(self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::EmptyGraph(n) => write!(f, "K{n}^C"),
            Family::Matching(p) => write!(f, "{p}K2"),
            Family::UnionWithK1(inner) => write!(f, "({inner} + K1)"),
            Family::UnionWithK2(inner) => write!(f, "({inner} + K2)"),
        }
    }
}

pub fn make_family(spec: &Family) -> Result<Graph, GraphError> {
    let positive = |n: usize, what: &str| {
        if n == 0 {
            Err(GraphError::InvalidFamily(format!("{what} needs at least one vertex")))
        } else {
            Ok(())
        }
    };
    match *spec {
        Family::Path(n) => {
            positive(n, "path")?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::InvalidFamily(format!(
                    "cycle needs at least 3 vertices, got {n}"
                )));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &edges)
        }
        Family::Complete(n) => {
            positive(n, "complete graph")?;
            let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::new(n, &edges)
        }
        Family::EmptyGraph(n) => {
            positive(n, "empty graph")?;
            Graph::empty(n)
        }
        Family::Matching(p) => {
            if p == 0 {
                return Err(GraphError::InvalidFamily("matching needs p >= 1".into()));
            }
            let edges: Vec<_> = (0..p).map(|i| (2 * i, 2 * i + 1)).collect();
            Graph::new(2 * p, &edges)
        }
        Family::UnionWithK1(ref inner) => make_family(inner)?.disjoint_union(&Graph::empty(1)?),
        Family::UnionWithK2(ref inner) => {
            make_family(inner)?.disjoint_union(&make_family(&Family::Complete(2))?)
        }
    }
}

/// True iff some vertex subset of `g` induces a graph isomorphic to `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    if h.n() > g.n() {
        return false;
    }
    if h.n() == 0 {
        return true;
    }
    // map pattern vertices in an order that keeps each new vertex attached to
    // the already-mapped ones where possible
    let order = matching_order(h);
    let mut search = InducedSearch {
        g,
        h,
        order: &order,
        image: vec![usize::MAX; h.n()],
        used: VertexSet::EMPTY,
    };
    search.extend(0)
}

fn matching_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut placed = VertexSet::EMPTY;
    while order.len() < h.n() {
        let next = h
            .vertices()
            .difference(placed)
            .iter()
            .max_by_key(|&v| (h.neighbors(v).intersection(placed).len(), h.degree(v), usize::MAX - v))
            .unwrap();
        order.push(next);
        placed = placed.with(next);
    }
    order
}

struct InducedSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: &'a [usize],
    image: Vec<usize>,
    used: VertexSet,
}

impl InducedSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let hv = self.order[depth];
        let h_deg = self.h.degree(hv);
        let h_non = self.h.n() - 1 - h_deg;
        // candidates must see exactly the images of hv's mapped neighbours
        let mut candidates = self.g.vertices().difference(self.used);
        for &hu in &self.order[..depth] {
            let gu = self.image[hu];
            let gu_nbrs = self.g.neighbors(gu);
            candidates = if self.h.has_edge(hv, hu) {
                candidates.intersection(gu_nbrs)
            } else {
                candidates.difference(gu_nbrs)
            };
        }
        for gv in candidates.iter() {
            let g_deg = self.g.degree(gv);
            if g_deg < h_deg || self.g.n() - 1 - g_deg < h_non {
                continue;
            }
            self.image[hv] = gv;
            self.used = self.used.with(gv);
            if self.extend(depth + 1) {
                return true;
            }
            self.used = self.used.without(gv);
        }
        self.image[hv] = usize::MAX;
        false
    }
}

/// True iff `g` contains none of the `forbidden` graphs as induced subgraphs.
pub fn is_free_of(g: &Graph, forbidden: &[Graph]) -> bool {
    forbidden.iter().all(|h| !contains_induced(g, h))
}

/// Perfect-graph oracle selector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PerfectMethod {
    /// χ = ω on every induced subgraph (2ⁿ sweep).
    Definitional,
    /// No odd hole and no odd antihole.
    #[default]
    HoleAntihole,
}

impl FromStr for PerfectMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "definitional" => Ok(PerfectMethod::Definitional),
            "hole" | "hole-antihole" => Ok(PerfectMethod::HoleAntihole),
            other => Err(format!("unknown perfect method `{other}` (definitional|hole)")),
        }
    }
}

pub fn is_perfect(g: &Graph, method: PerfectMethod) -> bool {
    is_perfect_within(g, g.vertices(), method)
}

/// Perfection of `G[s]`.
pub fn is_perfect_within(g: &Graph, s: VertexSet, method: PerfectMethod) -> bool {
    match method {
        PerfectMethod::Definitional => s
            .subsets()
            .all(|sub| g.chromatic_number_in(sub) == g.clique_number_in(sub)),
        PerfectMethod::HoleAntihole => {
            find_odd_hole(g, s).is_none() && find_odd_hole(&g.complement(), s).is_none()
        }
    }
}

/// An induced odd cycle of length at least 5 in `G[s]`, listed along the
/// cycle, if one exists.
pub fn find_odd_hole(g: &Graph, s: VertexSet) -> Option<Vec<usize>> {
    for start in s.iter() {
        // the start vertex is the smallest vertex of the hole
        let allowed = VertexSet::from_bits(s.bits() & (u64::MAX << start)).without(start);
        let mut path = vec![start];
        if extend_hole(g, allowed, &mut path, VertexSet::EMPTY) {
            return Some(path);
        }
    }
    None
}

/// Grows a chordless path from `path[0]`. `blocked` holds every vertex
/// adjacent to some interior vertex of the path other than its last one.
fn extend_hole(g: &Graph, allowed: VertexSet, path: &mut Vec<usize>, blocked: VertexSet) -> bool {
    let start = path[0];
    let last = *path.last().unwrap();
    let on_path: VertexSet = path.iter().copied().collect();
    let candidates = g
        .neighbors(last)
        .intersection(allowed)
        .difference(on_path)
        .difference(blocked);
    for w in candidates.iter() {
        let closes = path.len() >= 2 && g.has_edge(w, start);
        if closes {
            let len = path.len() + 1;
            if len >= 5 && len % 2 == 1 {
                path.push(w);
                return true;
            }
            continue;
        }
        // interior vertices other than the second may not touch the start
        let mut next_blocked = blocked;
        if path.len() >= 2 {
            next_blocked = next_blocked.union(g.neighbors(last));
        }
        path.push(w);
        if extend_hole(g, allowed, path, next_blocked) {
            return true;
        }
        path.pop();
    }
    false
}

/// True when `G[s]` is itself an odd hole or an odd antihole, i.e. a
/// minimally imperfect graph.
pub fn is_odd_hole_or_antihole(g: &Graph, s: VertexSet) -> bool {
    let size = s.len();
    if size < 5 || size.is_multiple_of(2) {
        return false;
    }
    let hole = s.iter().all(|v| g.neighbors(v).intersection(s).len() == 2);
    if hole {
        return g.is_connected_within(s);
    }
    let antihole = s.iter().all(|v| g.neighbors(v).intersection(s).len() == size - 3);
    antihole && g.complement().is_connected_within(s)
}
