use thiserror::Error;

use crate::graph::{Color, ColorSet, Parity};
use crate::graph::validate::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge label `{0}`")]
    DuplicateEdge(String),
    #[error("duplicate leg label `{0}`")]
    DuplicateLeg(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("unknown leg `{0}`")]
    UnknownLeg(String),
    #[error("`{label}` joins two {parity} vertices")]
    SameParity { label: String, parity: Parity },
    #[error("color {color} is outside the palette {palette}")]
    ColorOutOfRange { color: Color, palette: ColorSet },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid graph: {0}")]
    Invalid(ValidationReport),
    #[error("operation needs a closed graph, but the graph has {0} external legs")]
    OpenInput(usize),
    #[error("operation needs an open graph with external legs")]
    ClosedInput,
    #[error("expected {expected} colors, found {found}")]
    ColorCount { expected: usize, found: usize },
    #[error("palette {0} cannot be written in the graph file format")]
    UnsupportedPalette(ColorSet),
    #[error("palettes differ: {0} vs {1}")]
    PaletteMismatch(ColorSet, ColorSet),
    #[error("edges `{0}` and `{1}` have different colors")]
    EdgeColorMismatch(String, String),
    #[error("edge `{0}` is not a color-0 edge")]
    NotColorZero(String),
    #[error("legs `{0}` and `{1}` sit on vertices of the same parity")]
    LegParity(String, String),
    #[error("vertex `{0}` has the wrong parity for this operation")]
    VertexParity(String),
    #[error("bicolored path from leg `{leg}` with color {color} is broken at vertex `{vertex}`")]
    BrokenPath { leg: String, color: Color, vertex: String },
    #[error("dimension {0} is too small (need at least 2)")]
    Dimension(usize),
    #[error("unknown model `{0}`")]
    UnknownModel(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("ribbon structure: {0}")]
    Ribbon(String),
    #[error("face-count formula gives a non-integral degree")]
    NonIntegralDegree,
    #[error("no separator found: {0}")]
    NoSeparator(String),
}
