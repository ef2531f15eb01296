use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("part list is empty")]
    EmptySpec,
    #[error("part {0} has size zero")]
    ZeroPart(usize),
    #[error("cannot parse part sizes from {0:?}")]
    InvalidSpec(String),
    #[error("cannot parse girth from {0:?}")]
    InvalidGirth(String),
    #[error("vertex {0} lies in more than one part")]
    OverlappingParts(usize),
    #[error("vertex {0} lies in no part")]
    UncoveredVertex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("girth requirement must be at least 3, got {0}")]
    GirthTooSmall(usize),
    #[error("bound needs at least one vertex")]
    NoVertices,
    #[error("arboricity formula needs at least two vertices")]
    TooFewVertices,
    #[error("exhaustive search is limited to {cap} vertices, got {n}")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("arboricity of an edgeless graph is undefined here")]
    NoEdges,
    #[error("forest count must be at least 1")]
    ZeroForests,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("input is not a tree")]
    NotATree,
    #[error("input contains a cycle")]
    NotAForest,
    #[error("tree needs at least two vertices")]
    TreeTooSmall,
    #[error("no face carries the {0}-{1}-{2} path; embedding construction broke")]
    NoInsertionFace(usize, usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("odd part size {size} at position {index}")]
    OddPart { index: usize, size: usize },
    #[error("halved graph needs at least two vertices")]
    TooSmall,
    #[error("forest split into {0} classes failed; this contradicts the multipartite arboricity formula")]
    ForestSplitFailed(usize),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("exhaustive search is limited to {cap} edges, got {edges}")]
    TooManyEdges { edges: usize, cap: usize },
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}
