use core::fmt;

use crate::graph::Element;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Fewer than two vertices.
    TooSmall {
        n: usize,
    },
    SelfLoop {
        vertex: usize,
    },
    DuplicateEdge {
        u: usize,
        v: usize,
    },
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    Disconnected {
        components: usize,
    },
    /// An element that is neither a vertex nor an edge of the graph.
    UnknownElement(Element),
    /// The operation is only defined for trees, unicyclic graphs and cacti.
    NotACactus,
    /// No admissible augmentation yields a geodesic triple.
    Infeasible,
    /// The bound corollaries exclude the bare cycle `C_n`.
    CycleExcluded,
    EmptySet,
    /// Exhaustive search refused: too many candidate vertices.
    TooLarge {
        candidates: usize,
        max: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooSmall { n } => write!(f, "graph must have at least 2 vertices, got {n}"),
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
            Error::Disconnected { components } => {
                write!(f, "graph is disconnected ({components} components)")
            }
            Error::UnknownElement(x) => write!(f, "{x} is not an element of the graph"),
            Error::NotACactus => f.write_str("graph is not a cactus"),
            Error::Infeasible => f.write_str("no admissible augmentation forms a geodesic triple"),
            Error::CycleExcluded => f.write_str("the bound does not apply to a cycle graph C_n"),
            Error::EmptySet => f.write_str("generator set is empty"),
            Error::TooLarge { candidates, max } => {
                write!(
                    f,
                    "{candidates} candidate vertices exceed the search limit of {max}"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
