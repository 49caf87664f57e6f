//! graph6 codec and exhaustive small-graph corpora.
//!
//! graph6 (short form only): one size byte `n + 63`, then the upper
//! triangle of the adjacency matrix in column order `(0,1), (0,2), (1,2),
//! (0,3), ...`, packed six bits per byte, high bit first, each byte offset
//! by 63, zero-padded.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{CorpusError, Graph6Error};
use crate::graph::Graph;
use crate::recognition::is_free_of;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// Largest `n` the short-form size byte can express.
pub const GRAPH6_MAX_N: usize = 62;

/// Largest `n` the built-in enumerator accepts.
pub const ENUMERATION_CAP: usize = 7;

/// Largest `n` [`canonical_code`] can pack into a word.
pub const CANONICAL_MAX_N: usize = 11;

const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::BadByte {
            offset: skip + offset,
            byte: bytes[offset],
        });
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (bytes[0] - 63) as usize;
    let bits = pair_count(n);
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            found: bytes.len(),
        });
    }
    let data = &bytes[1..];
    let bit = |t: usize| (data[t / 6] - 63) >> (5 - t % 6) & 1 == 1;
    let mut rows = vec![0u64; n];
    let mut t = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(t) {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            t += 1;
        }
    }
    if (bits..data.len() * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding {
            offset: skip + bytes.len() - 1,
        });
    }
    Ok(Graph::from_rows(rows).expect("decoded rows are symmetric and loop-free"))
}

pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = pair_count(n);
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Reads newline-separated graph6, skipping blank lines. Errors carry the
/// 1-based line number.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, CorpusError> {
    let text = fs::read_to_string(path)?;
    parse_graph6_lines(&text)
}

pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, CorpusError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|source| CorpusError::Parse { line: i + 1, source }))
        .collect()
}

pub fn write_graph6_lines(graphs: &[Graph]) -> Result<String, Graph6Error> {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&encode_graph6(g)?);
        out.push('\n');
    }
    Ok(out)
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let bits = pair_count(n);
    let mut rows = vec![0u64; n];
    let mut t = 0;
    for v in 1..n {
        for u in 0..v {
            if code >> (bits - 1 - t) & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            t += 1;
        }
    }
    Graph::from_rows(rows).expect("code rows are symmetric")
}

/// The lexicographically smallest graph6-order adjacency bit string over
/// all relabelings of `g`, as an integer. `g.n()` must not exceed
/// [`CANONICAL_MAX_N`].
///
/// Column `j` of the bit string depends only on the vertices placed at
/// positions `0..=j`, so relabelings are built position by position and a
/// branch is dropped as soon as its prefix exceeds the best complete string.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.n() <= CANONICAL_MAX_N, "canonical_code supports n <= {CANONICAL_MAX_N}");
    let n = g.n();
    let mut search = CanonicalSearch {
        g,
        total_bits: pair_count(n),
        order: Vec::with_capacity(n),
        best: None,
    };
    search.place(0, 0, 0);
    search.best.unwrap_or(0)
}

pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_code(g.n(), canonical_code(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

struct CanonicalSearch<'a> {
    g: &'a Graph,
    total_bits: usize,
    order: Vec<usize>,
    best: Option<u64>,
}

impl CanonicalSearch<'_> {
    fn place(&mut self, used: u64, prefix: u64, prefix_len: usize) {
        let n = self.g.n();
        let j = self.order.len();
        if j == n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        for w in 0..n {
            if used & (1 << w) != 0 {
                continue;
            }
            let mut next = prefix;
            for &u in &self.order {
                next = next << 1 | u64::from(self.g.has_edge(u, w));
            }
            let next_len = prefix_len + j;
            if let Some(best) = self.best {
                let best_prefix = if next_len == 0 { 0 } else { best >> (self.total_bits - next_len) };
                if next > best_prefix {
                    continue;
                }
            }
            self.order.push(w);
            self.place(used | 1 << w, next, next_len);
            self.order.pop();
        }
    }
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, in increasing canonical-code order. Each representative is
/// in canonical labeling.
///
/// Classes on `n` vertices are obtained by attaching a new vertex, with
/// every possible neighbourhood, to each class on `n - 1` vertices, then
/// deduplicating by canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, CorpusError> {
    if n > ENUMERATION_CAP {
        return Err(CorpusError::EnumerationCap {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut codes: BTreeSet<u64> = BTreeSet::from([0]);
    for size in 1..=n {
        let mut next = BTreeSet::new();
        for &code in &codes {
            let base = graph_from_code(size - 1, code);
            for mask in 0u64..1 << (size - 1) {
                let mut rows: Vec<u64> = base.rows().to_vec();
                for (u, row) in rows.iter_mut().enumerate() {
                    if mask & (1 << u) != 0 {
                        *row |= 1 << (size - 1);
                    }
                }
                rows.push(mask);
                let g = Graph::from_rows(rows).expect("augmented rows are symmetric");
                next.insert(canonical_code(&g));
            }
        }
        codes = next;
    }
    Ok(codes.into_iter().map(|c| graph_from_code(n, c)).collect())
}

/// All classes with `1..=max_n` vertices, grouped by increasing `n`.
pub fn enumerate_up_to(max_n: usize) -> Result<Vec<Graph>, CorpusError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_graphs(n)?);
    }
    Ok(out)
}

/// Where a corpus comes from.
#[derive(Clone, Debug)]
pub enum CorpusSource {
    /// Newline-separated graph6 file.
    File(PathBuf),
    /// Built-in enumeration of every class with `1..=n` vertices.
    UpTo(usize),
    /// Built-in enumeration of the classes on exactly `n` vertices.
    Exactly(usize),
    Graphs(Vec<Graph>),
}

/// A corpus plus an optional list of forbidden induced subgraphs.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub source: CorpusSource,
    pub forbidden: Vec<Graph>,
}

impl Corpus {
    pub fn new(source: CorpusSource) -> Self {
        Corpus {
            source,
            forbidden: Vec::new(),
        }
    }

    pub fn up_to(n: usize) -> Self {
        Self::new(CorpusSource::UpTo(n))
    }

    pub fn from_graphs(graphs: Vec<Graph>) -> Self {
        Self::new(CorpusSource::Graphs(graphs))
    }

    pub fn free_of(mut self, forbidden: Graph) -> Self {
        self.forbidden.push(forbidden);
        self
    }

    pub fn describe(&self) -> String {
        let base = match &self.source {
            CorpusSource::File(p) => format!("file:{}", p.display()),
            CorpusSource::UpTo(n) => format!("all graphs with 1..={n} vertices"),
            CorpusSource::Exactly(n) => format!("all graphs with {n} vertices"),
            CorpusSource::Graphs(g) => format!("{} given graphs", g.len()),
        };
        if self.forbidden.is_empty() {
            base
        } else {
            format!("{base}, filtered to {} forbidden subgraph(s)", self.forbidden.len())
        }
    }

    pub fn load(&self) -> Result<Vec<Graph>, CorpusError> {
        let graphs = match &self.source {
            CorpusSource::File(path) => read_graph6_file(path)?,
            CorpusSource::UpTo(n) => enumerate_up_to(*n)?,
            CorpusSource::Exactly(n) => enumerate_graphs(*n)?,
            CorpusSource::Graphs(g) => g.clone(),
        };
        Ok(graphs
            .into_iter()
            .filter(|g| is_free_of(g, &self.forbidden))
            .collect())
    }
}
