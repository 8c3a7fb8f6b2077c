use crate::graphs::VertexLabel;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("coefficient overflow in {0}")]
    Overflow(&'static str),

    #[error("{what} bound exceeded: {actual} > {limit}")]
    BoundExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("a series needs at least one coefficient")]
    EmptySeries,

    #[error("exponents must be positive")]
    ZeroExponent,

    #[error("invalid mode {0}, expected 1 or 2")]
    InvalidMode(u32),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("part {part} occurs {multiplicity} times, at most 2 allowed")]
    MultiplicityTooLarge { part: u32, multiplicity: usize },

    #[error("max index {max_index} is below the smallest index {min_index}")]
    IndexTooSmall { max_index: u32, min_index: u32 },

    #[error("vertex index must be positive")]
    ZeroIndex,

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexLabel),

    #[error("self-loop at {0}")]
    SelfLoop(VertexLabel),

    #[error("invalid weight map: {0}")]
    InvalidWeights(String),

    #[error("environment variable {name} has invalid value {value:?}")]
    InvalidEnv { name: &'static str, value: String },

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("invalid monomial ideal: {0}")]
    InvalidIdeal(String),
}
