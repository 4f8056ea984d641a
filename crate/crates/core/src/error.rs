use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("partite sizes must be positive (got m={m}, n={n})")]
    EmptyPartite { m: usize, n: usize },

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("palette must contain at least one color")]
    EmptyPalette,

    #[error("vertex {0} does not exist in this graph")]
    InvalidVertex(Vertex),

    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(Vertex, Vertex),

    #[error("vertex {0} lies in the same partite as {1}")]
    SamePartite(Vertex, Vertex),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("coloring covers {coloring} edges but the graph has {graph}")]
    ColoringMismatch { coloring: usize, graph: usize },

    #[error("color {color} is outside the palette 1..={palette}")]
    ColorOutOfRange { color: u32, palette: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("d={d} has the wrong parity for {what}")]
    ParityMismatch { d: usize, what: &'static str },

    #[error("brute-force search refused: {edges} edges exceeds the cap of {cap}")]
    ResourceGuard { edges: usize, cap: usize },

    #[error("regime violation: {0}")]
    Regime(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
