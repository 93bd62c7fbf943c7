use core::fmt;

use crate::family::FamilyTag;

/// Errors produced by graph construction, codecs and the analysis routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An edge endpoint is not a valid vertex label for the given order.
    VertexOutOfRange { u: usize, v: usize, n: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { u: usize },
    /// The requested order exceeds the representable maximum.
    TooManyVertices { n: usize },
    /// Malformed graph6 input; `offset` is the byte position of the defect.
    Graph6 { offset: usize, reason: &'static str },
    /// The index specification violates its parameter constraints.
    InvalidIndexSpec(&'static str),
    /// Psi is undefined for this degree pair (zero raised to a negative power).
    UndefinedPower { du: usize, dv: usize },
    /// The operation requires a connected graph.
    Disconnected,
    /// The named pair is not an edge of the graph.
    NotAnEdge { u: usize, v: usize },
    /// The shift source has no neighbor outside the target's closed neighborhood.
    NoPrivateNeighbor { u: usize, v: usize },
    /// A family was requested below its minimum admissible order.
    FamilyTooSmall { tag: FamilyTag, min_n: usize },
    /// No closed-form expression is available for this family.
    UnsupportedFamily { tag: FamilyTag },
    /// The condition-check grid bound is below the smallest meaningful value.
    GridBoundTooSmall { bound: usize },
    /// The graph order exceeds the bound of the canonical-labeling machinery.
    OrderAboveBound { n: usize, bound: usize },
    /// No connected graph with these parameters exists.
    Infeasible { n: usize, m: usize },
    /// Two families were compared at different orders.
    MismatchedOrder { a_n: usize, b_n: usize },
    /// A series expansion was requested below its minimum order.
    SeriesOrderTooSmall { n: usize, min: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { u, v, n } => {
                write!(f, "edge ({u}, {v}) has an endpoint outside 0..{n}")
            }
            Error::SelfLoop { u } => write!(f, "self-loop at vertex {u}"),
            Error::TooManyVertices { n } => {
                write!(f, "{n} vertices exceeds the supported maximum of {}", crate::graph::MAX_VERTICES)
            }
            Error::Graph6 { offset, reason } => {
                write!(f, "invalid graph6 at byte {offset}: {reason}")
            }
            Error::InvalidIndexSpec(reason) => write!(f, "invalid index spec: {reason}"),
            Error::UndefinedPower { du, dv } => {
                write!(f, "Psi undefined on degree pair ({du}, {dv}): zero to a negative power")
            }
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::NotAnEdge { u, v } => write!(f, "({u}, {v}) is not an edge"),
            Error::NoPrivateNeighbor { u, v } => {
                write!(f, "vertex {v} has no neighbor outside N({u}) + {u}")
            }
            Error::FamilyTooSmall { tag, min_n } => {
                write!(f, "family {tag:?} requires at least {min_n} vertices")
            }
            Error::UnsupportedFamily { tag } => {
                write!(f, "no closed form for family {tag:?}")
            }
            Error::GridBoundTooSmall { bound } => {
                write!(f, "grid bound {bound} is below the minimum of 3")
            }
            Error::OrderAboveBound { n, bound } => {
                write!(f, "order {n} exceeds the supported bound {bound}")
            }
            Error::Infeasible { n, m } => {
                write!(f, "no connected graph with {n} vertices and {m} edges")
            }
            Error::MismatchedOrder { a_n, b_n } => {
                write!(f, "families compared at different orders {a_n} and {b_n}")
            }
            Error::SeriesOrderTooSmall { n, min } => {
                write!(f, "series expansion requires n >= {min}, got {n}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
