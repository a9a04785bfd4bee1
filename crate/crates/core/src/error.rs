use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors reported by the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A vertex index is `>= n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An element index is `>= n + m`.
    ElementOutOfRange { element: usize, len: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    /// An exhaustive routine refused an instance above its size cap.
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    NotATree,
    /// A set of elements contains two adjacent members.
    NotIndependent { a: usize, b: usize },
    /// A vector has the wrong length for the graph or polytope.
    LengthMismatch { expected: usize, found: usize },
    /// Input vectors do not share a common dimension.
    DimensionMismatch,
    EmptyInput,
    /// The vertex sets do not form a complete bipartite subgraph.
    NotABiclique,
    /// The biclique is not an induced subgraph of the host graph.
    NotInduced,
    /// A precondition of an operation does not hold.
    Precondition(String),
    /// The inequality is violated by the listed total matching.
    InvalidInequality { violator: Vec<usize> },
    /// The H-representation describes an unbounded set.
    Unbounded,
    /// The point set does not affinely span the ambient space.
    NotFullDimensional { affine_dim: usize, ambient: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph with {n} vertices")
            }
            Error::ElementOutOfRange { element, len } => {
                write!(f, "element {element} out of range (graph has {len} elements)")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u},{v}}}"),
            Error::CapExceeded { what, size, cap } => {
                write!(f, "{what}: size {size} exceeds cap {cap}")
            }
            Error::NotATree => f.write_str("graph is not a tree"),
            Error::NotIndependent { a, b } => {
                write!(f, "elements {a} and {b} are adjacent")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected a vector of length {expected}, found {found}")
            }
            Error::DimensionMismatch => f.write_str("vectors of different dimensions"),
            Error::EmptyInput => f.write_str("empty input"),
            Error::NotABiclique => f.write_str("vertex sets do not span a complete bipartite subgraph"),
            Error::NotInduced => f.write_str("biclique is not induced in the graph"),
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::InvalidInequality { violator } => {
                write!(f, "inequality violated by total matching {violator:?}")
            }
            Error::Unbounded => f.write_str("inequality system is unbounded"),
            Error::NotFullDimensional { affine_dim, ambient } => write!(
                f,
                "points span an affine space of dimension {affine_dim} in dimension {ambient}"
            ),
        }
    }
}

impl core::error::Error for Error {}
