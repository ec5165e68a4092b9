use crate::graph::VertexSubset;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A graph file (or inline graph text) failed to parse.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Graphs must have at least one non-root vertex.
    #[error("graph must have at least one non-root vertex")]
    EmptyGraph,

    /// Subset enumeration is bitmask-based; vertex counts past this are refused.
    #[error("graph has {0} non-root vertices; at most {max} are supported", max = VertexSubset::MAX_VERTICES)]
    TooManyVertices(usize),

    /// Self-loops are rejected everywhere: they never affect exit degrees.
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    /// An endpoint was outside 0..=n.
    #[error("vertex {vertex} is out of range 0..={max}")]
    VertexOutOfRange { vertex: usize, max: usize },

    /// An operation that needs a nonempty vertex subset got the empty one.
    #[error("subset must be nonempty")]
    EmptySubset,

    /// Exit degrees d_I(i) are only defined for members of the subset.
    #[error("vertex {vertex} is not in subset {subset}")]
    VertexNotInSubset { vertex: usize, subset: VertexSubset },

    /// A power-ideal generator would need a non-positive exponent.
    #[error(
        "subset {subset} has exit degree {exit_degree}, so its generator exponent \
         {exit_degree}+{k} is not positive"
    )]
    NonPositiveExponent {
        subset: VertexSubset,
        exit_degree: u32,
        k: i64,
    },

    /// Monomizations exist only for k = 0 and k = 1.
    #[error("k = {0} is not supported; monomizations exist only for k = 0 and k = 1")]
    UnsupportedK(i64),

    /// The operation is only defined for undirected graphs.
    #[error("operation requires an undirected graph")]
    DirectedGraph,

    /// The quotient by the monomial ideal has an unbounded variable.
    #[error("quotient is infinite: no generator bounds x{0}")]
    InfiniteQuotient(usize),

    /// The involution is only defined on compatible (subgraph, chain) pairs.
    #[error("subgraph is not compatible with chain {chain}: {reason}")]
    IncompatiblePair { chain: String, reason: String },

    /// A subset chain must be strictly increasing and contain nonempty sets.
    #[error("invalid subset chain: {0}")]
    InvalidChain(String),

    /// An edge selection (forest, functional subgraph, edge order) is invalid.
    #[error("invalid edge selection: {0}")]
    InvalidEdge(String),

    /// A comma-separated exponent vector on the command line was malformed.
    #[error("invalid vector {text:?}: {message}")]
    InvalidVector { text: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
