use num_bigint::BigUint;
use thiserror::Error;

use crate::predicates::Claw;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has loops or parallel edges; a simple graph is required")]
    NotSimple,

    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },

    #[error("graph is not claw-free: {0}")]
    NotClawFree(Claw),

    #[error("graph is not 2-edge-connected{}", match .bridge {
        Some(e) => format!(": edge {e} is a bridge"),
        None => " (disconnected or fewer than 2 vertices)".to_string(),
    })]
    NotTwoEdgeConnected { bridge: Option<usize> },

    #[error("graph is not 3-edge-connected")]
    NotThreeEdgeConnected,

    #[error("graph is isomorphic to K4")]
    IsK4,

    #[error("invalid base multigraph: {0}")]
    InvalidBase(String),

    #[error("length-0 parallel edges {0} and {1} would collide")]
    ParallelCollision(usize, usize),

    #[error("expected {expected} edge lengths, got {got}")]
    LengthCount { expected: usize, got: usize },

    #[error("a ring of diamonds needs at least 2 diamonds, got {0}")]
    TooFewDiamonds(usize),

    #[error("structure violation: {0}")]
    StructureViolation(String),

    #[error("enumeration needs {required} items but the cap is {cap}")]
    CapExceeded { required: BigUint, cap: u64 },

    #[error("vertex {vertex} has degree {degree} in the subset; expected {expected}")]
    DegreeViolation {
        vertex: usize,
        degree: usize,
        expected: &'static str,
    },

    #[error("operation needs an expanded decomposition")]
    NotExpanded,

    #[error("routing covers {got} diamonds but the cycle uses {expected}")]
    RoutingMismatch { expected: usize, got: usize },

    #[error("no 2-factor exists")]
    NoTwoFactor,

    #[error("bound failure: {distinct} distinct matchings ({generated} generated) do not exceed 2^({n}/12)")]
    BoundFailure {
        generated: usize,
        distinct: usize,
        n: usize,
    },
}
