use thiserror::Error;

/// Errors produced by constructions, validators and the I/O layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("matrix is not symmetric: entries ({i}, {j}) differ by {diff:e}")]
    Asymmetric { i: usize, j: usize, diff: f64 },
    #[error("vertex subset must be nonempty")]
    EmptySubset,
    #[error("v = {0} is not congruent to 1 or 3 mod 6")]
    Inadmissible(usize),
    #[error("invalid block {block:?}: {reason}")]
    InvalidBlock { block: Vec<usize>, reason: String },
    #[error("not a Steiner triple system: pair ({}, {}) lies in {count} blocks", pair.0, pair.1)]
    NotSteiner { pair: (usize, usize), count: usize },
    #[error("vector of vertex {vertex} has length {found}, expected {expected}")]
    DimensionMismatch { vertex: usize, expected: usize, found: usize },
    #[error("representation has no vector for vertex {0}")]
    MissingVertex(usize),
    #[error("representation covers {found} vertices, graph has {expected}")]
    VertexCountMismatch { expected: usize, found: usize },
    #[error("representation scale {found} does not match requested scale {expected}")]
    ScaleMismatch { expected: u32, found: u32 },
    #[error("vector of vertex {0} is not a (0,±1)-vector with exactly three nonzero entries")]
    NotSignVector(usize),
    #[error("representation does not verify: {0}")]
    Unverified(String),
    #[error("support {support:?} is shared by vertices {vertices:?}")]
    SharedSupport { support: [usize; 3], vertices: Vec<usize> },
    #[error("mates {0} and {1} have inner product {2}, expected 1")]
    MatesNotAdjacent(usize, usize, i64),
    #[error("representation has mates {0:?}; reconstruction needs S = ∅")]
    MatesPresent(Vec<(usize, usize)>),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("search budget must be positive")]
    InvalidBudget,
    #[error("fat vertices {0} and {1} are adjacent")]
    FatFatEdge(usize, usize),
    #[error("fat vertex {0} has no slim neighbor")]
    IsolatedFat(usize),
    #[error("Hoffman graph has no slim vertex")]
    NoSlim,
    #[error("vertex {0} is not fat")]
    NotFat(usize),
    #[error("not an induced Hoffman subgraph: {0}")]
    NotInduced(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
