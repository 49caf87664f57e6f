//! Exhaustive scans of bounds and conjectures over graph corpora.
//!
//! Proven statements are hard claims: a violation is reported as
//! [`Outcome::Fail`] and means the implementation is wrong. Open statements
//! can only produce [`Outcome::Finding`], a potential counterexample worth
//! replaying by hand.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::coloring::{chi_bound, color_from_certificate, verify_coloring};
use crate::corpus::{encode_graph6, parse_graph6, Corpus};
use crate::divisibility::{alpha_chain_certificate, verify_certificate, Decider, DEFAULT_DECISION_CAP};
use crate::error::CorpusError;
use crate::graph::{Graph, InvariantTriple};
use crate::recognition::{contains_induced, is_perfect_within, make_family, Family, PerfectMethod};

/// Version of the JSON report layout.
pub const REPORT_SCHEMA: u32 = 1;

/// What a scan checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "id", rename_all = "snake_case")]
pub enum Check {
    /// χ ≤ C(ω+k−1, k) and certificate colorings within it, for k ≤ kmax.
    Bound { kmax: usize },
    /// (P_n ∪ P₂)-free graphs are perfectly 3-divisible, n ∈ {3, 4}.
    Conjecture1 { path: usize },
    /// pK₂-free graphs are perfectly (2p−2)-divisible.
    Pk2 { p: usize },
    /// Perfect α-divisibility, the C(ω+α−1, α) bound and the α-chain certificate.
    Alpha,
    /// Anticomplete-edge sets induce perfect graphs in 2K₂-free and
    /// (P_n ∪ P₂)-free graphs.
    Anticomplete,
}

impl Check {
    /// Parses the CLI spelling; `kmax` only matters for `bound`.
    pub fn parse(s: &str, kmax: usize) -> Result<Self, String> {
        let check = match s {
            "bound" => Check::Bound { kmax },
            "conj1-p3" => Check::Conjecture1 { path: 3 },
            "conj1-p4" => Check::Conjecture1 { path: 4 },
            "alpha" => Check::Alpha,
            "anticomplete" => Check::Anticomplete,
            other => {
                let p = other
                    .strip_prefix("pk2:")
                    .and_then(|p| p.parse::<usize>().ok())
                    .ok_or_else(|| format!("unknown check `{other}`"))?;
                if p < 2 {
                    return Err(format!("pk2 needs p >= 2, got {p}"));
                }
                Check::Pk2 { p }
            }
        };
        if let Check::Bound { kmax: 0 } = check {
            return Err("--kmax must be at least 1".into());
        }
        Ok(check)
    }

    /// Forbidden graphs defining the scanned class, if any.
    fn class(&self) -> Vec<(String, Graph)> {
        let build = |f: Family| (f.to_string(), make_family(&f).expect("small family"));
        match *self {
            Check::Conjecture1 { path } => vec![build(Family::UnionWithK2(Box::new(Family::Path(path))))],
            Check::Pk2 { p } => vec![build(Family::Matching(p))],
            Check::Anticomplete => anticomplete_classes().into_iter().map(build).collect(),
            Check::Bound { .. } | Check::Alpha => Vec::new(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Bound { kmax } => write!(f, "bound(kmax={kmax})"),
            Check::Conjecture1 { path } => write!(f, "conj1-p{path}"),
            Check::Pk2 { p } => write!(f, "pk2:{p}"),
            Check::Alpha => f.write_str("alpha"),
            Check::Anticomplete => f.write_str("anticomplete"),
        }
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::parse(s, 3)
    }
}

fn anticomplete_classes() -> Vec<Family> {
    vec![
        Family::Matching(2),
        Family::UnionWithK2(Box::new(Family::Path(3))),
        Family::UnionWithK2(Box::new(Family::Path(4))),
    ]
}

/// Whether graphs are processed on the rayon pool. Without the `parallel`
/// feature both variants run sequentially.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Graphs above this size are skipped.
    pub decision_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            decision_cap: DEFAULT_DECISION_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanSpec {
    pub check: Check,
    pub corpus: Corpus,
    pub limits: Limits,
    pub execution: Execution,
}

impl ScanSpec {
    pub fn new(check: Check, corpus: Corpus) -> Self {
        ScanSpec {
            check,
            corpus,
            limits: Limits::default(),
            execution: Execution::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    /// A proven claim failed: implementation bug.
    Fail,
    /// An open claim failed: potential counterexample.
    Finding,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    /// Left and right side of the checked inequality, when it is one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl ClaimResult {
    fn new(claim: &str, outcome: Outcome) -> Self {
        ClaimResult {
            claim: claim.to_string(),
            outcome,
            k: None,
            lhs: None,
            rhs: None,
            detail: None,
        }
    }

    /// `lhs ≤ rhs`, a hard claim.
    fn at_most(claim: &str, k: Option<usize>, lhs: u64, rhs: u64) -> Self {
        let outcome = if lhs <= rhs { Outcome::Pass } else { Outcome::Fail };
        ClaimResult {
            k,
            lhs: Some(lhs),
            rhs: Some(rhs),
            ..Self::new(claim, outcome)
        }
    }

    fn holds(claim: &str, hard: bool, ok: bool) -> Self {
        let outcome = match (ok, hard) {
            (true, _) => Outcome::Pass,
            (false, true) => Outcome::Fail,
            (false, false) => Outcome::Finding,
        };
        Self::new(claim, outcome)
    }

    fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    /// Levels k ≤ kmax at which the graph is perfectly k-divisible (bound scans).
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub divisible_at: Vec<usize>,
    pub results: Vec<ClaimResult>,
}

/// Everything needed to replay one failed claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub n: usize,
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    #[serde(flatten)]
    pub result: ClaimResult,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub finding: usize,
    pub skip: usize,
}

impl Tally {
    fn add(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Pass => self.pass += 1,
            Outcome::Fail => self.fail += 1,
            Outcome::Finding => self.finding += 1,
            Outcome::Skip => self.skip += 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    /// Graphs in the corpus before class filtering.
    pub corpus_size: usize,
    /// Graphs inside the scanned class.
    pub tested: usize,
    /// Claim outcomes over all tested graphs.
    pub claims: Tally,
    /// Claim outcomes by vertex count.
    pub by_n: BTreeMap<usize, Tally>,
    pub counterexamples: Vec<Counterexample>,
    pub wall_time_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub schema: u32,
    pub check: Check,
    pub corpus: String,
    pub records: Vec<GraphRecord>,
    pub summary: Summary,
}

impl ScanReport {
    /// 0 when no hard claim failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.claims.fail > 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The report with wall time cleared, for determinism comparisons.
    pub fn without_timing(&self) -> ScanReport {
        let mut copy = self.clone();
        copy.summary.wall_time_ms = 0.0;
        copy
    }
}

pub fn run_scan(spec: &ScanSpec) -> Result<ScanReport, CorpusError> {
    let start = Instant::now();
    let graphs = spec.corpus.load()?;
    let class = spec.check.class();
    let check = spec.check;
    let limits = spec.limits;
    let evaluated = map_graphs(&graphs, spec.execution, |g| {
        let memberships: Vec<&str> = class
            .iter()
            .filter(|(_, h)| !contains_induced(g, h))
            .map(|(name, _)| name.as_str())
            .collect();
        if !class.is_empty() && memberships.is_empty() {
            return None;
        }
        Some(evaluate_graph(check, g, &memberships, limits))
    });
    let records: Vec<GraphRecord> = evaluated.into_iter().flatten().collect();

    let mut summary = Summary {
        corpus_size: graphs.len(),
        tested: records.len(),
        ..Summary::default()
    };
    for record in &records {
        for result in &record.results {
            summary.claims.add(result.outcome);
            summary.by_n.entry(record.n).or_default().add(result.outcome);
            if matches!(result.outcome, Outcome::Fail | Outcome::Finding) {
                summary.counterexamples.push(Counterexample {
                    graph6: record.graph6.clone(),
                    n: record.n,
                    omega: record.omega,
                    alpha: record.alpha,
                    chi: record.chi,
                    result: result.clone(),
                });
            }
        }
    }
    summary.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(ScanReport {
        schema: REPORT_SCHEMA,
        check: spec.check,
        corpus: spec.corpus.describe(),
        records,
        summary,
    })
}

#[cfg(feature = "parallel")]
fn map_graphs<R, F>(graphs: &[Graph], execution: Execution, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(&Graph) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match execution {
        Execution::Parallel => graphs.par_iter().map(f).collect(),
        Execution::Sequential => graphs.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn map_graphs<R, F>(graphs: &[Graph], _execution: Execution, f: F) -> Vec<R>
where
    F: Fn(&Graph) -> R,
{
    graphs.iter().map(f).collect()
}

pub fn run_bound_check(corpus: Corpus, kmax: usize) -> Result<ScanReport, CorpusError> {
    run_scan(&ScanSpec::new(Check::Bound { kmax }, corpus))
}

pub fn run_conjecture1_scan(corpus: Corpus, path: usize) -> Result<ScanReport, CorpusError> {
    run_scan(&ScanSpec::new(Check::Conjecture1 { path }, corpus))
}

pub fn run_pk2_scan(corpus: Corpus, p: usize) -> Result<ScanReport, CorpusError> {
    run_scan(&ScanSpec::new(Check::Pk2 { p }, corpus))
}

pub fn run_alpha_scan(corpus: Corpus) -> Result<ScanReport, CorpusError> {
    run_scan(&ScanSpec::new(Check::Alpha, corpus))
}

pub fn run_anticomplete_scan(corpus: Corpus) -> Result<ScanReport, CorpusError> {
    run_scan(&ScanSpec::new(Check::Anticomplete, corpus))
}

/// True iff, for every edge `uv`, the vertices adjacent to neither `u` nor
/// `v` (and distinct from both) induce a perfect graph.
pub fn anticomplete_edge_perfection(g: &Graph) -> bool {
    g.edges().into_iter().all(|(u, v)| {
        let touched = g.neighbors(u).union(g.neighbors(v)).with(u).with(v);
        let x = g.vertices().difference(touched);
        is_perfect_within(g, x, PerfectMethod::HoleAntihole)
    })
}

fn bound(omega: usize, k: usize) -> u64 {
    chi_bound(omega as u64, k as u64).unwrap_or(u64::MAX)
}

/// Runs every claim of `check` on one graph. `classes` names the scanned
/// classes the graph belongs to.
pub fn evaluate_graph(check: Check, g: &Graph, classes: &[&str], limits: Limits) -> GraphRecord {
    let InvariantTriple { omega, alpha, chi } = g.invariants();
    let mut record = GraphRecord {
        graph6: encode_graph6(g).unwrap_or_else(|_| format!("<n={}>", g.n())),
        n: g.n(),
        omega,
        alpha,
        chi,
        divisible_at: Vec::new(),
        results: Vec::new(),
    };
    let chi64 = chi as u64;
    if let Check::Anticomplete = check {
        let holds = anticomplete_edge_perfection(g);
        for class in classes {
            record.results.push(
                ClaimResult::holds("anticomplete_edge_perfection", true, holds)
                    .with_detail(format!("{class}-free")),
            );
        }
        return record;
    }
    let mut decider = match Decider::with_cap(g, limits.decision_cap) {
        Ok(d) => d,
        Err(e) => {
            record
                .results
                .push(ClaimResult::new("decision", Outcome::Skip).with_detail(e.to_string()));
            return record;
        }
    };
    let divisible = |decider: &mut Decider<'_>, k: usize| -> bool {
        decider.is_divisible(k).expect("level >= 1 and within cap")
    };

    match check {
        Check::Bound { kmax } => {
            for k in 1..=kmax {
                if !divisible(&mut decider, k) {
                    continue;
                }
                record.divisible_at.push(k);
                let rhs = bound(omega, k);
                record
                    .results
                    .push(ClaimResult::at_most("chi_bound", Some(k), chi64, rhs));
                record.results.push(certificate_coloring_claim(g, &mut decider, k, rhs));
            }
        }
        Check::Conjecture1 { .. } => {
            record
                .results
                .push(ClaimResult::holds("perfectly_3_divisible", false, divisible(&mut decider, 3)).with_k(3));
            record.results.push(ClaimResult::at_most(
                "bharathi_choudum_bound",
                Some(3),
                chi64,
                bound(omega, 3),
            ));
        }
        Check::Pk2 { p } => {
            let k = 2 * p - 2;
            record.results.push(
                ClaimResult::holds(&format!("perfectly_{k}_divisible"), false, divisible(&mut decider, k)).with_k(k),
            );
            if p == 2 {
                record
                    .results
                    .push(ClaimResult::at_most("wagon_bound", Some(2), chi64, bound(omega, 2)));
            }
        }
        Check::Alpha => {
            if g.n() == 0 {
                return record;
            }
            record
                .results
                .push(ClaimResult::holds("perfectly_alpha_divisible", true, divisible(&mut decider, alpha)).with_k(alpha));
            let rhs = bound(omega, alpha);
            record.results.push(ClaimResult::at_most(
                "hoang_mcdiarmid_bound",
                Some(alpha),
                chi64,
                rhs,
            ));
            record.results.push(alpha_chain_claim(g, alpha, rhs));
        }
        Check::Anticomplete => unreachable!("handled above"),
    }
    record
}

fn certificate_coloring_claim(g: &Graph, decider: &mut Decider<'_>, k: usize, budget: u64) -> ClaimResult {
    let name = "certificate_coloring";
    let cert = match decider.certificate(k) {
        Ok(Some(cert)) => cert,
        Ok(None) => {
            return ClaimResult::new(name, Outcome::Fail)
                .with_k(k)
                .with_detail("decision true but no certificate")
        }
        Err(e) => return ClaimResult::new(name, Outcome::Fail).with_k(k).with_detail(e.to_string()),
    };
    colored_within(g, &cert, name, k, budget)
}

fn alpha_chain_claim(g: &Graph, alpha: usize, budget: u64) -> ClaimResult {
    let name = "alpha_chain_certificate";
    match alpha_chain_certificate(g) {
        Ok(cert) if cert.level == alpha => colored_within(g, &cert, name, alpha, budget),
        Ok(cert) => ClaimResult::new(name, Outcome::Fail)
            .with_k(alpha)
            .with_detail(format!("root level {} instead of α", cert.level)),
        Err(e) => ClaimResult::new(name, Outcome::Fail).with_k(alpha).with_detail(e.to_string()),
    }
}

fn colored_within(
    g: &Graph,
    cert: &crate::divisibility::Certificate,
    name: &str,
    k: usize,
    budget: u64,
) -> ClaimResult {
    if let Err(e) = verify_certificate(g, cert) {
        return ClaimResult::new(name, Outcome::Fail).with_k(k).with_detail(e.to_string());
    }
    let coloring = match color_from_certificate(g, cert) {
        Ok(c) => c,
        Err(e) => return ClaimResult::new(name, Outcome::Fail).with_k(k).with_detail(e.to_string()),
    };
    let used = coloring.palette_size as u64;
    let mut result = ClaimResult::at_most(name, Some(k), used, budget);
    let budget = usize::try_from(budget).unwrap_or(usize::MAX);
    if let Err(e) = verify_coloring(g, &coloring, budget) {
        result.outcome = Outcome::Fail;
        result.detail = Some(e.to_string());
    }
    result
}

/// Re-evaluates the graph of a counterexample and returns the matching
/// claim result.
pub fn replay(check: Check, cx: &Counterexample, limits: Limits) -> Option<ClaimResult> {
    let g = parse_graph6(&cx.graph6).ok()?;
    let classes: Vec<(String, Graph)> = check.class();
    let names: Vec<&str> = classes
        .iter()
        .filter(|(_, h)| !contains_induced(&g, h))
        .map(|(n, _)| n.as_str())
        .collect();
    evaluate_graph(check, &g, &names, limits)
        .results
        .into_iter()
        .find(|r| r.claim == cx.result.claim && r.k == cx.result.k && r.detail == cx.result.detail)
}
