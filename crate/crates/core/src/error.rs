use thiserror::Error;

/// Errors from graph construction and graph-level operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("basepoint {basepoint} out of range for {vertex_count} vertices")]
    BadBasepoint { basepoint: usize, vertex_count: usize },
    #[error("edge {edge} touches vertex {vertex}, but there are only {vertex_count} vertices")]
    BadEndpoint { edge: usize, vertex: usize, vertex_count: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("non-basepoint vertex {vertex} has degree {degree} < 3")]
    NonBasepointDegree { vertex: usize, degree: usize },
    #[error("declared rank {declared} but edges give rank {actual}")]
    RankMismatch { declared: i64, actual: i64 },
    #[error("edge index {edge} out of range ({edge_count} edges)")]
    NoSuchEdge { edge: usize, edge_count: usize },
    #[error("vertex index {vertex} out of range ({vertex_count} vertices)")]
    NoSuchVertex { vertex: usize, vertex_count: usize },
    #[error("operation requires a non-basepoint vertex, got the basepoint")]
    BasepointNotAllowed,
    #[error("cannot parse graph file: {0}")]
    Parse(String),
}

/// Errors from forest validation and collapse.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForestError {
    #[error("edge set is not a forest: {reason}")]
    NotAForest { reason: String },
    #[error("operation requires a nonempty forest")]
    EmptyForest,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors from partitions and blow-ups.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition block sizes out of range: {reason}")]
    BadBlocks { reason: String },
    #[error("compatibility is only defined for distinct partitions")]
    SamePartition,
    #[error("partitions in a blow-up must be pairwise compatible")]
    IncompatiblePartitions,
    #[error("partition ground set has {partition_ground} elements, vertex has degree {degree}")]
    WrongArity { partition_ground: usize, degree: usize },
    #[error("blow-up must assign at least one nontrivial vertex blow-up")]
    EmptyBlowUp,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors from partition-complex specifications.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SigmaError {
    #[error("bad range: {reason}")]
    BadRange { reason: String },
    #[error("vertex is not a size-{m} vertex outside the <{m} stage: {reason}")]
    NotASizeMVertex { m: usize, reason: String },
    #[error("cannot parse complex spec {input:?}: {reason}")]
    BadSpec { input: String, reason: String },
}

/// Errors from simplicial-complex operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("simplex {simplex:?} is not in the complex")]
    SimplexAbsent { simplex: Vec<u32> },
    #[error("simplex {simplex:?} has a vertex >= vertex count {vertex_count}")]
    VertexOutOfRange { simplex: Vec<u32>, vertex_count: usize },
    #[error("simplex {simplex:?} repeats a vertex")]
    DuplicateVertex { simplex: Vec<u32> },
    #[error("cannot parse complex file: {0}")]
    Parse(String),
}

/// Errors from finite poset construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation touches element {element}, but there are only {element_count} elements")]
    BadElement { element: usize, element_count: usize },
    #[error("relation has a cycle through element {element}")]
    Cycle { element: usize },
}

/// Errors from the verification harness.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("requested bound {requested} exceeds the configured hard bound {bound} for {what}")]
    BoundExceeded { what: String, requested: usize, bound: usize },
    #[error("unknown lemma id {0:?}")]
    UnknownLemma(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
