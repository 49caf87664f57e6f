//! Perfect k-divisibility.
//!
//! A graph is perfectly 1-divisible when it is perfect. For `k >= 2` it is
//! perfectly k-divisible when every induced subgraph `H` is either a stable
//! set or splits into `X1`, `X2` with `ω(H[X1]) < ω(H)` and `H[X2]`
//! perfectly (k−1)-divisible.
//!
//! The decision runs over all `2ⁿ` vertex subsets at once. Writing `D_k(S)`
//! for "G[S] is perfectly k-divisible", heredity gives
//!
//! ```text
//! D_k(S) = good_k(S) ∧ ∀v∈S D_k(S∖{v})
//! good_k(S) = ω(S) ≤ 1 ∨ ∃X2⊆S: D_{k-1}(X2) ∧ ω(S∖X2) < ω(S)
//! ```
//!
//! and every table entry depends only on numerically smaller masks, so each
//! level is one bottom-up pass. Level 1 uses the fact that a graph is
//! perfect iff all its proper induced subgraphs are perfect and it is not
//! itself an odd hole or odd antihole.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{DivisibilityError, GraphError};
use crate::graph::{Graph, VertexSet};
use crate::recognition::{self, PerfectMethod};

/// Default largest `n` accepted by the subset-memo decision.
pub const DEFAULT_DECISION_CAP: usize = 16;

/// Hard ceiling for raised caps; tables hold `2ⁿ` entries per level.
pub const MAX_DECISION_CAP: usize = 24;

const NO_CHOICE: u32 = u32::MAX;

/// Decision outcomes for one level, indexed by vertex mask.
struct MemoTable {
    divisible: Vec<bool>,
    /// Chosen `X2` for non-stable divisible sets, `NO_CHOICE` otherwise.
    choice: Vec<u32>,
}

/// Memoized divisibility decisions for one graph.
///
/// Levels are built lazily and never rewritten once built.
pub struct Decider<'g> {
    graph: &'g Graph,
    complement: Graph,
    omega: Vec<u8>,
    levels: Vec<MemoTable>,
}

impl<'g> Decider<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self, DivisibilityError> {
        Self::with_cap(graph, DEFAULT_DECISION_CAP)
    }

    pub fn with_cap(graph: &'g Graph, cap: usize) -> Result<Self, DivisibilityError> {
        let cap = cap.min(MAX_DECISION_CAP);
        if graph.n() > cap {
            return Err(DivisibilityError::CapExceeded { n: graph.n(), cap });
        }
        Ok(Decider {
            graph,
            complement: graph.complement(),
            omega: subset_clique_numbers(graph),
            levels: Vec::new(),
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// ω(G[s]) from the subset table.
    #[inline]
    pub fn omega(&self, s: VertexSet) -> usize {
        self.omega[s.bits() as usize] as usize
    }

    pub fn is_divisible(&mut self, k: usize) -> Result<bool, DivisibilityError> {
        self.is_divisible_within(self.graph.vertices(), k)
    }

    /// Whether `G[s]` is perfectly k-divisible.
    pub fn is_divisible_within(&mut self, s: VertexSet, k: usize) -> Result<bool, DivisibilityError> {
        if k == 0 {
            return Err(DivisibilityError::ZeroLevel);
        }
        self.ensure_level(k);
        Ok(self.levels[k - 1].divisible[s.intersection(self.graph.vertices()).bits() as usize])
    }

    /// Smallest k for which the graph is perfectly k-divisible.
    pub fn index(&mut self) -> Result<usize, DivisibilityError> {
        if self.graph.n() == 0 {
            return Err(DivisibilityError::EmptyGraph);
        }
        // every graph is perfectly α-divisible, so the search stops by α
        let alpha = self.graph.stability_number();
        for k in 1..=alpha {
            if self.is_divisible(k)? {
                return Ok(k);
            }
        }
        Err(DivisibilityError::Internal(format!(
            "graph with α = {alpha} is not perfectly α-divisible"
        )))
    }

    /// A certificate for the whole graph at level `k`, if the graph is
    /// perfectly k-divisible.
    pub fn certificate(&mut self, k: usize) -> Result<Option<Certificate>, DivisibilityError> {
        if !self.is_divisible(k)? {
            return Ok(None);
        }
        Ok(Some(self.build_certificate(self.graph.vertices(), k)))
    }

    fn build_certificate(&self, set: VertexSet, level: usize) -> Certificate {
        if self.omega(set) <= 1 {
            return Certificate::stable(set, level);
        }
        if level == 1 {
            return Certificate::perfect(set);
        }
        let choice = self.levels[level - 1].choice[set.bits() as usize];
        debug_assert_ne!(choice, NO_CHOICE);
        let x2 = VertexSet::from_bits(choice as u64);
        let x1 = set.difference(x2);
        Certificate::split(
            self.build_certificate(x1, level),
            self.build_certificate(x2, level - 1),
        )
    }

    fn ensure_level(&mut self, k: usize) {
        while self.levels.len() < k {
            let table = if self.levels.is_empty() {
                self.perfect_table()
            } else {
                self.next_level_table(self.levels.last().unwrap())
            };
            self.levels.push(table);
        }
    }

    fn perfect_table(&self) -> MemoTable {
        let size = 1usize << self.graph.n();
        let mut divisible = vec![false; size];
        for mask in 0..size {
            let s = VertexSet::from_bits(mask as u64);
            divisible[mask] = all_children(&divisible, s)
                && !minimally_imperfect(self.graph, &self.complement, s);
        }
        MemoTable {
            divisible,
            choice: vec![NO_CHOICE; size],
        }
    }

    fn next_level_table(&self, below: &MemoTable) -> MemoTable {
        let size = 1usize << self.graph.n();
        let mut divisible = vec![false; size];
        let mut choice = vec![NO_CHOICE; size];
        for mask in 0..size {
            let s = VertexSet::from_bits(mask as u64);
            if !all_children(&divisible, s) {
                continue;
            }
            let omega = self.omega[mask];
            if omega <= 1 {
                divisible[mask] = true;
                continue;
            }
            // first hit in decreasing mask order; X2 = S itself comes first
            let found = s.subsets().find(|&x2| {
                below.divisible[x2.bits() as usize]
                    && self.omega[s.difference(x2).bits() as usize] < omega
            });
            if let Some(x2) = found {
                divisible[mask] = true;
                choice[mask] = x2.bits() as u32;
            }
        }
        MemoTable { divisible, choice }
    }
}

#[inline]
fn all_children(table: &[bool], s: VertexSet) -> bool {
    s.iter().all(|v| table[s.without(v).bits() as usize])
}

fn minimally_imperfect(g: &Graph, complement: &Graph, s: VertexSet) -> bool {
    let size = s.len();
    if size < 5 || size.is_multiple_of(2) {
        return false;
    }
    let degrees_all = |d: usize| s.iter().all(|v| g.neighbors(v).intersection(s).len() == d);
    (degrees_all(2) && g.is_connected_within(s))
        || (degrees_all(size - 3) && complement.is_connected_within(s))
}

/// ω(G[S]) for every mask, via `ω(S) = max(ω(S∖v), 1 + ω(S ∩ N(v)))` with
/// `v` the lowest vertex of `S`.
fn subset_clique_numbers(g: &Graph) -> Vec<u8> {
    let size = 1usize << g.n();
    let mut omega = vec![0u8; size];
    for mask in 1..size {
        let v = mask.trailing_zeros() as usize;
        let without = mask & !(1 << v);
        let inside = mask & g.rows()[v] as usize;
        omega[mask] = omega[without].max(1 + omega[inside]);
    }
    omega
}

pub fn is_perfectly_k_divisible(g: &Graph, k: usize) -> Result<bool, DivisibilityError> {
    match k {
        0 => Err(DivisibilityError::ZeroLevel),
        1 => Ok(recognition::is_perfect(g, PerfectMethod::HoleAntihole)),
        _ => Decider::new(g)?.is_divisible(k),
    }
}

pub fn divisibility_index(g: &Graph) -> Result<usize, DivisibilityError> {
    Decider::new(g)?.index()
}

pub fn extract_certificate(g: &Graph, k: usize) -> Result<Option<Certificate>, DivisibilityError> {
    Decider::new(g)?.certificate(k)
}

/// A recursive partition tree witnessing perfect k-divisibility of the
/// root set. Sets are in the labeling of the graph the tree was built for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CertificateWire", into = "CertificateWire")]
pub struct Certificate {
    pub set: VertexSet,
    pub level: usize,
    pub kind: CertificateKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    StableLeaf,
    /// Only valid at level 1.
    PerfectLeaf,
    /// `left` holds `X1` at the same level, `right` holds `X2` one level down.
    Split {
        left: Box<Certificate>,
        right: Box<Certificate>,
    },
}

impl Certificate {
    pub fn stable(set: VertexSet, level: usize) -> Self {
        Certificate {
            set,
            level,
            kind: CertificateKind::StableLeaf,
        }
    }

    pub fn perfect(set: VertexSet) -> Self {
        Certificate {
            set,
            level: 1,
            kind: CertificateKind::PerfectLeaf,
        }
    }

    /// Joins `left` (X1) and `right` (X2) under a node at `left`'s level.
    pub fn split(left: Certificate, right: Certificate) -> Self {
        Certificate {
            set: left.set.union(right.set),
            level: left.level,
            kind: CertificateKind::Split {
                left: Box::new(left),
                right: Box::new(right),
            },
        }
    }

    /// `(X1, X2)` at a split node.
    pub fn parts(&self) -> Option<(VertexSet, VertexSet)> {
        match &self.kind {
            CertificateKind::Split { left, right } => Some((left.set, right.set)),
            _ => None,
        }
    }

    pub fn node_count(&self) -> usize {
        match &self.kind {
            CertificateKind::Split { left, right } => 1 + left.node_count() + right.node_count(),
            _ => 1,
        }
    }

    pub fn depth(&self) -> usize {
        match &self.kind {
            CertificateKind::Split { left, right } => 1 + left.depth().max(right.depth()),
            _ => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum WireKind {
    Stable,
    Perfect,
    Split,
}

/// JSON layout: `{"set": [..], "level": k, "kind": "stable"|"perfect"|"split", "children": [..]}`.
#[derive(Serialize, Deserialize)]
struct CertificateWire {
    set: VertexSet,
    level: usize,
    kind: WireKind,
    #[serde(default)]
    children: Vec<CertificateWire>,
}

impl From<Certificate> for CertificateWire {
    fn from(cert: Certificate) -> Self {
        let (kind, children) = match cert.kind {
            CertificateKind::StableLeaf => (WireKind::Stable, Vec::new()),
            CertificateKind::PerfectLeaf => (WireKind::Perfect, Vec::new()),
            CertificateKind::Split { left, right } => {
                (WireKind::Split, vec![(*left).into(), (*right).into()])
            }
        };
        CertificateWire {
            set: cert.set,
            level: cert.level,
            kind,
            children,
        }
    }
}

impl TryFrom<CertificateWire> for Certificate {
    type Error = String;

    fn try_from(wire: CertificateWire) -> Result<Self, String> {
        let kind = match (wire.kind, wire.children.len()) {
            (WireKind::Stable, 0) => CertificateKind::StableLeaf,
            (WireKind::Perfect, 0) => CertificateKind::PerfectLeaf,
            (WireKind::Split, 2) => {
                let mut children = wire.children.into_iter();
                let left = Certificate::try_from(children.next().unwrap())?;
                let right = Certificate::try_from(children.next().unwrap())?;
                CertificateKind::Split {
                    left: Box::new(left),
                    right: Box::new(right),
                }
            }
            (kind, count) => return Err(format!("{kind:?} node with {count} children")),
        };
        Ok(Certificate {
            set: wire.set,
            level: wire.level,
            kind,
        })
    }
}

/// Why a certificate was rejected. `set` is always the offending node's set.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("node {set:?}: vertices outside the graph")]
    OutOfRange { set: VertexSet },
    #[error("node {set:?}: level 0")]
    ZeroLevel { set: VertexSet },
    #[error("node {set:?}: children do not partition the node's set")]
    NotAPartition { set: VertexSet },
    #[error("node {set:?}: ω(X1) = {x1_omega} is not below ω = {omega}")]
    NoCliqueDrop {
        set: VertexSet,
        omega: usize,
        x1_omega: usize,
    },
    #[error("node {set:?} at level {level}: child levels {left}/{right}, expected {level}/{}", level.saturating_sub(1))]
    LevelMismatch {
        set: VertexSet,
        level: usize,
        left: usize,
        right: usize,
    },
    #[error("node {set:?}: split at level 1")]
    SplitAtLevelOne { set: VertexSet },
    #[error("stable leaf {set:?} contains an edge")]
    NotStable { set: VertexSet },
    #[error("perfect leaf {set:?} at level {level}; perfect leaves belong to level 1")]
    PerfectLeafLevel { set: VertexSet, level: usize },
    #[error("perfect leaf {set:?} induces an imperfect graph")]
    NotPerfect { set: VertexSet },
}

/// Checks every structural condition of `cert` against `g`.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<(), CertificateError> {
    let set = cert.set;
    if !set.is_subset(g.vertices()) {
        return Err(CertificateError::OutOfRange { set });
    }
    if cert.level == 0 {
        return Err(CertificateError::ZeroLevel { set });
    }
    match &cert.kind {
        CertificateKind::StableLeaf => {
            if !g.is_stable_set(set) {
                return Err(CertificateError::NotStable { set });
            }
        }
        CertificateKind::PerfectLeaf => {
            if cert.level != 1 {
                return Err(CertificateError::PerfectLeafLevel {
                    set,
                    level: cert.level,
                });
            }
            if !recognition::is_perfect_within(g, set, PerfectMethod::HoleAntihole) {
                return Err(CertificateError::NotPerfect { set });
            }
        }
        CertificateKind::Split { left, right } => {
            if cert.level == 1 {
                return Err(CertificateError::SplitAtLevelOne { set });
            }
            if !left.set.is_disjoint(right.set) || left.set.union(right.set) != set {
                return Err(CertificateError::NotAPartition { set });
            }
            if left.level != cert.level || right.level + 1 != cert.level {
                return Err(CertificateError::LevelMismatch {
                    set,
                    level: cert.level,
                    left: left.level,
                    right: right.level,
                });
            }
            let omega = g.clique_number_in(set);
            let x1_omega = g.clique_number_in(left.set);
            if x1_omega >= omega {
                return Err(CertificateError::NoCliqueDrop {
                    set,
                    omega,
                    x1_omega,
                });
            }
            verify_certificate(g, left)?;
            verify_certificate(g, right)?;
        }
    }
    Ok(())
}

/// `(N(v), M(v) ∪ {v})` and whether `ω(G[N(v)]) < ω(G)` holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeighborhoodPartition {
    pub vertex: usize,
    pub x1: VertexSet,
    pub x2: VertexSet,
    pub clique_drop: bool,
}

impl fmt::Display for NeighborhoodPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={} X1={:?} X2={:?} drop={}", self.vertex, self.x1, self.x2, self.clique_drop)
    }
}

pub fn neighborhood_partition(g: &Graph, v: usize) -> Result<NeighborhoodPartition, GraphError> {
    let (nbrs, non) = g.neighborhoods(v)?;
    let x2 = non.with(v);
    Ok(NeighborhoodPartition {
        vertex: v,
        x1: nbrs,
        x2,
        clique_drop: g.clique_number_in(nbrs) < g.clique_number(),
    })
}

/// The polynomial-size certificate at level α(G): repeatedly split off the
/// neighbourhood of a maximum-clique vertex.
///
/// Every node `S` at level `k` is a set `T ∪ I` with `α(G[T]) ≤ k` and `I`
/// isolated in `G[S]`, so the level-1 nodes are a clique plus isolated
/// vertices. An imperfect level-1 node would therefore mean a bug and is
/// reported as [`DivisibilityError::Internal`].
pub fn alpha_chain_certificate(g: &Graph) -> Result<Certificate, DivisibilityError> {
    if g.n() == 0 {
        return Err(DivisibilityError::EmptyGraph);
    }
    chain_node(g, g.vertices(), g.stability_number())
}

fn chain_node(g: &Graph, set: VertexSet, level: usize) -> Result<Certificate, DivisibilityError> {
    if g.is_stable_set(set) {
        return Ok(Certificate::stable(set, level));
    }
    if level == 1 {
        if !recognition::is_perfect_within(g, set, PerfectMethod::HoleAntihole) {
            return Err(DivisibilityError::Internal(format!(
                "level-1 node {set:?} of the α-chain is imperfect"
            )));
        }
        return Ok(Certificate::perfect(set));
    }
    let omega = g.clique_number_in(set);
    let v = set
        .iter()
        .find(|&v| 1 + g.clique_number_in(set.intersection(g.neighbors(v))) == omega)
        .expect("a nonempty set has a maximum clique");
    let x1 = set.intersection(g.neighbors(v));
    let x2 = set.difference(x1);
    Ok(Certificate::split(chain_node(g, x1, level)?, chain_node(g, x2, level - 1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::{make_family, Family};

    fn fam(f: Family) -> Graph {
        make_family(&f).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    /// Direct reading of the definition: recurse over every induced
    /// subgraph and every partition, no memo.
    fn definition_oracle(g: &Graph, s: VertexSet, k: usize) -> bool {
        if k == 1 {
            return recognition::is_perfect_within(g, s, PerfectMethod::Definitional);
        }
        s.subsets().all(|h| {
            g.is_stable_set(h)
                || h.subsets().any(|x2| {
                    g.clique_number_in(h.difference(x2)) < g.clique_number_in(h)
                        && definition_oracle(g, x2, k - 1)
                })
        })
    }

    fn c5_certificate() -> Certificate {
        Certificate::split(
            Certificate::stable(set(&[1, 4]), 2),
            Certificate::perfect(set(&[0, 2, 3])),
        )
    }

    #[test]
    fn decision_examples() {
        let c5 = fam(Family::Cycle(5));
        assert!(!is_perfectly_k_divisible(&c5, 1).unwrap());
        assert!(is_perfectly_k_divisible(&c5, 2).unwrap());
        assert!(is_perfectly_k_divisible(&fam(Family::Complete(4)), 1).unwrap());
        assert_eq!(is_perfectly_k_divisible(&c5, 0), Err(DivisibilityError::ZeroLevel));
    }

    #[test]
    fn decision_matches_definition_on_small_graphs() {
        let graphs = [
            fam(Family::Cycle(5)),
            fam(Family::Cycle(5)).disjoint_union(&fam(Family::Complete(1))).unwrap(),
            fam(Family::Matching(2)),
            fam(Family::Path(4)),
        ];
        for g in &graphs {
            let mut d = Decider::new(g).unwrap();
            for k in 1..=3 {
                assert_eq!(
                    d.is_divisible(k).unwrap(),
                    definition_oracle(g, g.vertices(), k),
                    "{g:?} k={k}"
                );
            }
        }
    }

    #[test]
    fn level_one_table_matches_definitional_oracle() {
        let g = fam(Family::Cycle(7)).complement();
        let mut d = Decider::new(&g).unwrap();
        d.ensure_level(1);
        for s in g.vertices().subsets() {
            assert_eq!(
                d.levels[0].divisible[s.bits() as usize],
                recognition::is_perfect_within(&g, s, PerfectMethod::Definitional),
                "{s:?}"
            );
        }
    }

    #[test]
    fn omega_table_matches_branch_and_bound() {
        let g = fam(Family::Cycle(7)).complement();
        let table = subset_clique_numbers(&g);
        for s in g.vertices().subsets() {
            assert_eq!(table[s.bits() as usize] as usize, g.clique_number_in(s));
        }
    }

    #[test]
    fn index_examples() {
        assert_eq!(divisibility_index(&fam(Family::Complete(1))).unwrap(), 1);
        assert_eq!(divisibility_index(&fam(Family::Cycle(5))).unwrap(), 2);
        assert_eq!(divisibility_index(&fam(Family::Cycle(7))).unwrap(), 2);
        assert_eq!(divisibility_index(&Graph::empty(0).unwrap()), Err(DivisibilityError::EmptyGraph));
    }

    #[test]
    fn c7_proper_subgraphs_are_perfect() {
        let c7 = fam(Family::Cycle(7));
        for v in 0..7 {
            assert!(recognition::is_perfect_within(
                &c7,
                c7.vertices().without(v),
                PerfectMethod::Definitional
            ));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(17).unwrap();
        assert_eq!(
            is_perfectly_k_divisible(&g, 2),
            Err(DivisibilityError::CapExceeded { n: 17, cap: 16 })
        );
        assert!(Decider::with_cap(&g, 17).is_ok());
        let huge = Graph::empty(30).unwrap();
        assert!(matches!(
            Decider::with_cap(&huge, 40),
            Err(DivisibilityError::CapExceeded { cap: MAX_DECISION_CAP, .. })
        ));
    }

    #[test]
    fn empty_graph_is_vacuously_divisible() {
        let g = Graph::empty(0).unwrap();
        for k in 1..=3 {
            assert!(is_perfectly_k_divisible(&g, k).unwrap());
        }
        let cert = extract_certificate(&g, 2).unwrap().unwrap();
        assert_eq!(cert.kind, CertificateKind::StableLeaf);
    }

    #[test]
    fn handmade_c5_certificate_verifies() {
        let c5 = fam(Family::Cycle(5));
        assert_eq!(verify_certificate(&c5, &c5_certificate()), Ok(()));
    }

    #[test]
    fn swapped_parts_fail_the_clique_drop() {
        let c5 = fam(Family::Cycle(5));
        let swapped = Certificate::split(
            Certificate::stable(set(&[0, 2, 3]), 2),
            Certificate::perfect(set(&[1, 4])),
        );
        // {0,2,3} is not stable either, but the ω check at the split fires first
        assert_eq!(
            verify_certificate(&c5, &swapped),
            Err(CertificateError::NoCliqueDrop {
                set: c5.vertices(),
                omega: 2,
                x1_omega: 2
            })
        );
    }

    #[test]
    fn imperfect_leaf_rejected() {
        let c5 = fam(Family::Cycle(5));
        assert_eq!(
            verify_certificate(&c5, &Certificate::perfect(c5.vertices())),
            Err(CertificateError::NotPerfect { set: c5.vertices() })
        );
    }

    #[test]
    fn structural_violations_rejected() {
        let c5 = fam(Family::Cycle(5));
        let mut cert = c5_certificate();
        cert.set = c5.vertices().without(3);
        assert!(matches!(
            verify_certificate(&c5, &cert),
            Err(CertificateError::NotAPartition { .. })
        ));

        let mut cert = c5_certificate();
        cert.level = 3;
        assert!(matches!(
            verify_certificate(&c5, &cert),
            Err(CertificateError::LevelMismatch { .. })
        ));

        let high_leaf = Certificate {
            set: set(&[0, 1]),
            level: 2,
            kind: CertificateKind::PerfectLeaf,
        };
        assert!(matches!(
            verify_certificate(&c5, &high_leaf),
            Err(CertificateError::PerfectLeafLevel { .. })
        ));
        assert!(matches!(
            verify_certificate(&c5, &Certificate::stable(set(&[0, 1]), 1)),
            Err(CertificateError::NotStable { .. })
        ));
        assert!(matches!(
            verify_certificate(&c5, &Certificate::stable(set(&[7]), 1)),
            Err(CertificateError::OutOfRange { .. })
        ));
        let mut low = c5_certificate();
        low.level = 1;
        if let CertificateKind::Split { left, .. } = &mut low.kind {
            left.level = 1;
        }
        assert!(matches!(
            verify_certificate(&c5, &low),
            Err(CertificateError::SplitAtLevelOne { .. })
        ));
    }

    #[test]
    fn extraction_examples() {
        let c5 = fam(Family::Cycle(5));
        let cert = extract_certificate(&c5, 2).unwrap().unwrap();
        assert_eq!(cert.set, c5.vertices());
        assert_eq!(cert.level, 2);
        assert_eq!(verify_certificate(&c5, &cert), Ok(()));
        assert_eq!(extract_certificate(&c5, 1).unwrap(), None);

        let k3 = fam(Family::Complete(3));
        assert_eq!(
            extract_certificate(&k3, 1).unwrap(),
            Some(Certificate::perfect(k3.vertices()))
        );
    }

    #[test]
    fn neighborhood_partition_examples() {
        let p = neighborhood_partition(&fam(Family::Cycle(5)), 0).unwrap();
        assert_eq!((p.x1, p.x2, p.clique_drop), (set(&[1, 4]), set(&[0, 2, 3]), true));
        let p = neighborhood_partition(&fam(Family::Complete(4)), 0).unwrap();
        assert_eq!((p.x1, p.x2, p.clique_drop), (set(&[1, 2, 3]), set(&[0]), true));
        let p = neighborhood_partition(&fam(Family::Matching(2)), 0).unwrap();
        assert_eq!((p.x1, p.x2), (set(&[1]), set(&[0, 2, 3])));
        assert!(neighborhood_partition(&fam(Family::Matching(2)), 4).is_err());
    }

    #[test]
    fn alpha_chain_examples() {
        let c5 = fam(Family::Cycle(5));
        let cert = alpha_chain_certificate(&c5).unwrap();
        assert_eq!(cert.level, 2);
        assert_eq!(verify_certificate(&c5, &cert), Ok(()));

        let k5 = fam(Family::Complete(5));
        assert_eq!(alpha_chain_certificate(&k5).unwrap(), Certificate::perfect(k5.vertices()));

        let c7 = fam(Family::Cycle(7));
        let cert = alpha_chain_certificate(&c7).unwrap();
        assert_eq!(cert.level, 3);
        assert_eq!(verify_certificate(&c7, &cert), Ok(()));
    }

    #[test]
    fn alpha_chain_scales_past_the_decision_cap() {
        let big = fam(Family::Cycle(9))
            .disjoint_union(&fam(Family::Cycle(7)).complement())
            .unwrap()
            .disjoint_union(&fam(Family::Matching(6)))
            .unwrap();
        assert_eq!(big.n(), 28);
        let cert = alpha_chain_certificate(&big).unwrap();
        assert_eq!(cert.level, big.stability_number());
        assert_eq!(verify_certificate(&big, &cert), Ok(()));
    }

    #[test]
    fn certificate_json_shape() {
        let json = serde_json::to_string(&c5_certificate()).unwrap();
        assert_eq!(
            json,
            r#"{"set":[0,1,2,3,4],"level":2,"kind":"split","children":[{"set":[1,4],"level":2,"kind":"stable","children":[]},{"set":[0,2,3],"level":1,"kind":"perfect","children":[]}]}"#
        );
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c5_certificate());
        let bad = r#"{"set":[0],"level":1,"kind":"split","children":[]}"#;
        assert!(serde_json::from_str::<Certificate>(bad).is_err());
    }
}
