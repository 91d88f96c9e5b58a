use thiserror::Error;

use crate::format::ParseError;
use crate::graph::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex set belongs to a different graph")]
    ForeignSet,
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("set is not hereditary")]
    NotHereditary,
    #[error("set is hereditary but not saturated")]
    NotSaturated,
    #[error("{what} capacity exceeded: limit {limit}, requested {requested}")]
    CapacityExceeded {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no unique maximal saturated hereditary set disjoint from the input")]
    NonUniqueMaximum,
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
