use thiserror::Error;

use crate::defcone::FormTag;
use crate::graphcore::SubsetMask;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{what} is limited to {max}, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("orientation does not match the graph or contains a directed cycle")]
    InvalidOrientation,

    #[error("invalid ordered partition: {0}")]
    InvalidPartition(String),

    #[error("cells are not adjacent in the refined braid fan")]
    NotAdjacent,

    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not in the linear span: equation {0} fails")]
    NotInSpan(FormTag),

    #[error("not in the deformation cone: inequality {0} is negative")]
    NotInCone(FormTag),

    #[error("graph is not triangle-free")]
    NotTriangleFree,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("missing height value for subset {mask} (mask {})", mask.bits())]
    MissingSubset { mask: SubsetMask },
}

impl Error {
    pub(crate) fn too_large(what: &'static str, n: usize, max: usize) -> Self {
        Error::TooLarge { what, n, max }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
