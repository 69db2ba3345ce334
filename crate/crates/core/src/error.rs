//! Error type shared across the library.

use crate::graph::{Sign, ViewMode};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at node {0}")]
    SelfLoop(u32),

    #[error("endpoint {node} out of range for graph with {n} nodes")]
    EndpointOutOfRange { node: u32, n: usize },

    #[error("duplicate {sign} edge ({u}, {v})")]
    DuplicateEdge { u: u32, v: u32, sign: Sign },

    #[error("the {sign} world is empty in {mode} mode")]
    EmptyWorld { sign: Sign, mode: ViewMode },

    #[error("walk order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_WALK_ORDER)]
    WalkOrderTooLarge(u32),

    #[error("walk counts overflowed 64-bit integers at order {order}")]
    WalkOverflow { order: u32 },

    #[error("attribute `{name}` missing for node {node}")]
    MissingAttribute { name: String, node: u32 },

    #[error("operation requires an undirected view")]
    DirectedViewUnsupported,

    #[error("operation requires a directed view")]
    UndirectedViewUnsupported,

    #[error("degree sequence is not graphical")]
    NonGraphical,

    #[error("degree sequences must have one entry per node ({expected}), got {got}")]
    SequenceLength { expected: usize, got: usize },

    #[error("failed to realize a simple graph after {swaps} repair swaps")]
    GenerationFailure { swaps: usize },

    #[error("invalid generator parameter: {0}")]
    InvalidGeneratorSpec(String),

    #[error("rewire budget must be at least 1")]
    ZeroBudget,

    #[error("graph too small for this measure (need at least {need} nodes)")]
    TooSmall { need: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
