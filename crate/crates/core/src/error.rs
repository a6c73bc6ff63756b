use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family} requires order at least {min}, got {got}")]
    InvalidOrder {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge index {index} out of range for a graph with {size} edges")]
    EdgeOutOfRange { index: usize, size: usize },
    #[error("an edge is not adjacent to itself (edge {0})")]
    SameEdge(usize),
    #[error("vertex {vertex} is not an endpoint of edge {edge}")]
    NotAnEndpoint { edge: usize, vertex: usize },
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("empty edge subset")]
    EmptyMask,
    #[error("mask {bits:#x} does not fit in {epsilon} edges")]
    MaskOutOfRange { bits: u64, epsilon: usize },
    #[error("edge subsets must be distinct")]
    IdenticalSubsets,
    #[error("subsets from hosts of different sizes ({0} vs {1} edges)")]
    HostMismatch(usize, usize),
    #[error("subset index (s={size}, i={rank}) invalid for {epsilon} edges")]
    SubsetIndexOutOfRange {
        size: usize,
        rank: u64,
        epsilon: usize,
    },
    #[error("cardinality {k} out of range 1..={n}")]
    CardinalityOutOfRange { k: usize, n: usize },
    #[error("{what}: {actual} exceeds the limit of {limit}")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown claim '{0}'")]
    UnknownClaim(String),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }

    pub(crate) fn limit(what: &'static str, limit: usize, actual: usize) -> Result<()> {
        if actual > limit {
            Err(Error::ResourceLimit {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
