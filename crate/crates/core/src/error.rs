use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices, above the cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisibilityError {
    #[error("graph has {n} vertices; the subset-memo decision is capped at {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("divisibility level must be at least 1")]
    ZeroLevel,
    #[error("the divisibility index is undefined for the empty graph")]
    EmptyGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("certificate rejected: {0}")]
    InvalidCertificate(#[from] crate::divisibility::CertificateError),
    #[error("certificate root covers {covered} of the graph's {n} vertices")]
    PartialRoot { covered: usize, n: usize },
    #[error("chi bound C({top}, {k}) overflows u64")]
    Overflow { top: u64, k: u64 },
    #[error("divisibility level must be at least 1")]
    ZeroLevel,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("long-form size fields (n > 62) are not supported")]
    LongForm,
    #[error("expected {expected} bytes for n = {n}, found {found}")]
    BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph6 short form holds at most 62 vertices, graph has {0}")]
    TooLarge(usize),
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("built-in enumeration stops at n = {cap}; supply a graph6 file for n = {n}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
