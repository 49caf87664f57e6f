//! Perfect k-divisibility of small graphs.
//!
//! A graph is perfectly 1-divisible when it is perfect, and perfectly
//! k-divisible when each of its induced subgraphs is a stable set or splits
//! into a part with a smaller clique number and a perfectly
//! (k−1)-divisible part. Such graphs satisfy `χ ≤ C(ω + k − 1, k)`.
//!
//! This crate decides the property exactly for graphs up to a few dozen
//! vertices by memoizing over vertex subsets, extracts and checks partition
//! certificates, turns certificates into colorings within the binomial
//! bound, and scans exhaustive corpora of small graphs for violations of
//! the known bounds and for counterexamples to open divisibility claims.

pub mod coloring;
pub mod corpus;
pub mod divisibility;
pub mod error;
pub mod graph;
pub mod recognition;
pub mod scan;

pub use coloring::{chi_bound, color_from_certificate, verify_coloring, Coloring};
pub use corpus::{encode_graph6, enumerate_graphs, parse_graph6, Corpus, CorpusSource};
pub use divisibility::{
    alpha_chain_certificate, divisibility_index, extract_certificate, is_perfectly_k_divisible,
    neighborhood_partition, verify_certificate, Certificate, CertificateKind, Decider,
};
pub use error::{ColoringError, CorpusError, DivisibilityError, Graph6Error, GraphError};
pub use graph::{Graph, InvariantTriple, VertexSet};
pub use recognition::{contains_induced, is_perfect, make_family, Family, PerfectMethod};
pub use scan::{run_scan, Check, Execution, ScanReport, ScanSpec};
