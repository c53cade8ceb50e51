use thiserror::Error;

use crate::planar_core::{EdgeId, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rotation at vertex {vertex}: {detail}")]
    MalformedRotation { vertex: Vertex, detail: String },
    #[error("Euler check failed on the component of vertex {vertex}: V - E + F = {euler}")]
    NonPlanarCertificate { vertex: Vertex, euler: i64 },
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("no face sequence connects {0} and {1}")]
    Disconnected(Vertex, Vertex),
    #[error("{what} has size {size}, above the limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("edge list is not a simple cycle: {0}")]
    NotACycle(String),
    #[error("cycles {0} and {1} share a vertex")]
    NotDisjoint(usize, usize),
    #[error("cycle {0} does not lie inside cycle {1}")]
    NotNested(usize, usize),
    #[error("cut reduction needs at least 3 holes, found {0}")]
    HoleCountTooSmall(usize),
    #[error("expected {expected} holes, found {found}")]
    WrongHoleCount { expected: usize, found: usize },
    #[error("the holes lie in different components")]
    NoConnectingCurve,
    #[error("edge {0}-{1} is not covered by any bag")]
    EdgeUncovered(Vertex, Vertex),
    #[error("bags containing vertex {0} do not form a subtree")]
    VertexSubtreeDisconnected(Vertex),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("modulator leaves width {width}, above eta = {eta}")]
    ModulatorInvalid { width: usize, eta: usize },
    #[error("boundary of size {size} exceeds the limit {limit}")]
    BoundaryTooLarge { size: usize, limit: usize },
    #[error("candidate enumeration of {size} graphs exceeds the budget {limit}")]
    BudgetExceeded { size: usize, limit: usize },
    #[error("splice produced an invalid embedding: {0}")]
    SpliceNonPlanar(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("graph contains loops")]
    LoopsNotSupported,
}

pub type Result<T> = std::result::Result<T, Error>;
