use thiserror::Error;

use crate::edgeset::EdgeSet;

/// Conditions of a coherent trail, used to report which one broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coherence {
    /// Separators covered, endpoints in the right level sets.
    C1,
    /// Every non-circuit edge sits inside an admissible bracket.
    C2,
    /// Closures are subtrails with disjoint witnessing intervals.
    C3,
    /// A rerouting trail shared an edge with the current trail.
    EdgeDisjoint,
}

impl std::fmt::Display for Coherence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Coherence::C1 => "C1",
            Coherence::C2 => "C2",
            Coherence::C3 => "C3",
            Coherence::EdgeDisjoint => "edge-disjointness",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge id {edge} out of range (m = {m})")]
    EdgeOutOfRange { edge: usize, m: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),

    #[error("input graph is disconnected")]
    DisconnectedInput,

    #[error("prescribed edge set is empty")]
    EmptyS,

    #[error("edge set is not even")]
    NotEven,

    #[error("edge set is not connected")]
    NotConnected,

    #[error("vertex set to contract is empty")]
    EmptyW,

    #[error("vertex set to contract does not induce a connected subgraph")]
    DisconnectedW,

    #[error("fewer than two edge-disjoint paths; cut of size {}", .0.len())]
    CutTooSmall(EdgeSet),

    #[error("segment {0} is not a path")]
    SegmentNotPath(usize),

    #[error("no segment is reached from both ends of the new edge")]
    NoSharedSegment,

    #[error("descent did not decrease its measure: {0}")]
    DescentStalled(String),

    #[error("coherence condition {0} violated: {1}")]
    CoherenceViolated(Coherence, String),

    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),

    #[error("prescribed edges do not extend to an even subgraph")]
    NotExtendable,

    #[error("bad parameter: {0}")]
    BadParam(String),

    #[error("attempt budget exhausted after {0} tries")]
    Exhausted(usize),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
