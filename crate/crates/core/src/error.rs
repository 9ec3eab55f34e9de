use thiserror::Error;

use crate::graph::{Color, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("vertex {0} declared twice")]
    DuplicateVertex(VertexId),
    #[error("needs at least {needed} vertices, found {found}")]
    TooFewVertices { needed: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {0} has no color")]
    Uncolored(VertexId),
    #[error("vertex {0} has no list")]
    MissingList(VertexId),
    #[error("search cap exceeded: {0}")]
    CapExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("coloring of the subdivision is not dynamic")]
    NotDynamic,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("invalid drawing: {0}")]
    Invalid(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("edge {0}-{1} already exists")]
    EdgeExists(VertexId, VertexId),
    #[error("vertices {0} and {1} do not share the face")]
    NotOnFace(VertexId, VertexId),
    #[error("no valid way to insert the edge {0}-{1}")]
    NoInsertion(VertexId, VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("configuration is stale: {0}")]
    Stale(String),
    #[error("step coloring {vertex}: every color of the list is forbidden by {forbidden:?}")]
    EmptyCandidates { vertex: VertexId, forbidden: Vec<Color> },
    #[error("extension produced an invalid coloring: {0}")]
    Unsound(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}
