//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate direction: point coincides with origin")]
    DegenerateDirection,

    #[error("coincident points: ids {first} and {second} share coordinates")]
    CoincidentPoints { first: usize, second: usize },

    #[error("invalid point data: {0}")]
    InvalidPoints(String),

    #[error("unknown node id {0}")]
    UnknownNode(usize),

    #[error("segment endpoints coincide")]
    DegenerateSegment,

    #[error("unsupported configuration: {0}")]
    UnsupportedConfig(String),

    #[error("empty candidate set")]
    EmptyCandidates,

    #[error("candidate {0} is not in the stated quadrant")]
    CandidateOutsideQuadrant(usize),

    #[error("walk hop ({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("walks cannot be concatenated: end {0} != start {1}")]
    BadConcat(usize, usize),

    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),

    #[error("edges do not properly cross")]
    NotCrossing,

    #[error("cycle detected in quadrant walk")]
    CycleDetected,

    #[error("hop guard exceeded in directed path")]
    HopGuardExceeded,

    #[error("recursion bound violated in crossing-path construction")]
    RecursionBoundViolated,

    #[error("path construction failed: {0}")]
    ConstructionFailed(String),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
