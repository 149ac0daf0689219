use crate::hypergraph::{EdgeId, VertexId};
use crate::weight::Weight;

/// Errors surfaced by construction, validation, parsing and generators.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("hyperedge must contain at least one vertex")]
    EmptyEdge,
    #[error("vertex {vertex} out of range (hypergraph has {n} vertices)")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("weight {0} must be finite and nonnegative")]
    BadWeight(Weight),
    #[error("unknown hyperedge id {0}")]
    UnknownEdge(EdgeId),
    #[error("hyperedge {0} is not alive")]
    EdgeNotAlive(EdgeId),
    #[error("hyperedge {0} is already alive")]
    EdgeAlive(EdgeId),
    #[error("weight change on hyperedge {edge} has the wrong direction: {current} -> {requested}")]
    WrongDirection {
        edge: EdgeId,
        current: Weight,
        requested: Weight,
    },
    #[error("hyperedges {0} and {1} are consecutive in the path but do not intersect")]
    BrokenAdjacency(EdgeId, EdgeId),
    #[error("invalid source vertex {0}")]
    BadSource(VertexId),
    #[error("vertex {0} is not reachable from the source")]
    Unreachable(VertexId),
    #[error("facet must contain at least one vertex")]
    EmptyFacet,
    #[error("no alive hyperedge to target")]
    NothingToTarget,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    BadParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
