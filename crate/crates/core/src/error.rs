/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("quiver file, line {line}: {msg}")]
    QuiverSyntax { line: usize, msg: String },

    #[error("arrow {vertex} -> {vertex} is a loop")]
    LoopArrow { vertex: usize },

    #[error("the quiver contains a directed cycle")]
    CycleDetected,

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: i64, n: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operation requires a nonzero dimension vector")]
    ZeroVector,

    #[error("dimension vector entries must be non-negative")]
    NegativeEntry,

    #[error("the underlying graph is not a disjoint union of ADE Dynkin diagrams; \
             the root system is infinite, use the bounded tools instead")]
    NotRepresentationFinite,

    #[error("conic hull of an empty list of cones")]
    EmptyHull,

    #[error("segment endpoints must be distinct")]
    DegenerateSegment,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
