use thiserror::Error;

use crate::graph::Edge;

/// Errors raised by graph editing and interchange.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: invalid byte {byte:#04x} at offset {offset}")]
    Graph6BadByte { byte: u8, offset: usize },
    #[error("graph6: truncated input, expected {expected} bytes but found {found}")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6: {0} unexpected trailing bytes")]
    Graph6Trailing(usize),
    #[error("graph6: graphs with {0} vertices are not supported")]
    Graph6TooLarge(usize),
    #[error("edge list: {0}")]
    EdgeList(String),
}

/// Errors raised by connectivity queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("vertex connectivity needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("cyclic edge connectivity is only checked for k <= 7, got {0}")]
    KTooLarge(usize),
}

/// Errors raised by the graph constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotDegreeThree { vertex: usize, degree: usize },
    #[error("base graph is not cubic")]
    NotCubic,
    #[error("port map {0:?} is not a permutation of 0..3")]
    BadBijection([usize; 3]),
    #[error("edges {0} and {1} must be distinct")]
    SameEdge(Edge, Edge),
    #[error("{0:?} is not a triangle")]
    NotTriangle([usize; 3]),
    #[error("triangle neighbourhood is not three distinct vertices")]
    BadTriangleNeighbourhood,
    #[error("family member must have exactly 3 leaves, found {0}")]
    LeafCount(usize),
    #[error("no 6-cycle through the triangle neighbourhood")]
    NoSixCycle,
    #[error("{0} distinct 6-cycles through the triangle neighbourhood")]
    SixCycleNotUnique(usize),
    #[error("cut {0:?} is not a 3-edge matching cut")]
    NotMatchingCut(Vec<Edge>),
    #[error("family certificate invalid: {0}")]
    InvalidCertificate(String),
    #[error("unknown base graph {0:?}")]
    UnknownBase(String),
    #[error("R_s needs s >= 1")]
    BadOrder,
    #[error("recipe: {0}")]
    Recipe(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by the packing solver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackingError {
    #[error("edge {0} is both required and forbidden")]
    RequiredForbidden(Edge),
    #[error("required edge {0} touches a removed vertex")]
    RequiredTouchesRemoved(Edge),
    #[error("constraint edge {0} is not in the graph")]
    EdgeNotInGraph(Edge),
    #[error("constraint vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("brute-force oracle limited to 14 vertices, got {0}")]
    OracleTooLarge(usize),
}

/// Errors raised by the corpus tools.
#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cubic graphs need an even order, got {0}")]
    OddOrder(usize),
    #[error("generation supports 4 <= n <= 16, got {0}")]
    OrderOutOfRange(usize),
    #[error("canonical labelling budget exceeded after {0} leaves")]
    BudgetExceeded(u64),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Errors raised by claim evaluation and the lemma checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("claims need a cubic graph")]
    NotCubic,
    #[error("claims need a 3-connected graph (connectivity {0})")]
    NotThreeConnected(usize),
    #[error("packing is not a Λ-factor of the graph: {0}")]
    NotAFactor(String),
    #[error("splice side A has v(A) = 2 (mod 3); classify with the sides swapped")]
    SideResidue,
    #[error("no cut case matches: {0}")]
    LemmaViolation(String),
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error(transparent)]
    Packing(#[from] PackingError),
}
