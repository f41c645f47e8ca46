use thiserror::Error;

use crate::family::Embedding;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input at byte {position}: {reason}")]
    MalformedInput { position: usize, reason: String },
    #[error("graphs of order {0} are not supported by this encoder")]
    Unsupported(usize),
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("input of order {n} exceeds the supported limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("colouring covers {coloring} vertices but the graph has {graph}")]
    SizeMismatch { coloring: usize, graph: usize },
    #[error("invalid colouring: {0}")]
    InvalidColoring(String),
    #[error("colouring is not proper")]
    ImproperColoring,
    #[error("vertex order is not a permutation of the vertex set")]
    BadOrder,
    #[error("colour {0} still has a b-vertex")]
    HasBVertex(usize),
    #[error("vertex {0} has no free colour (internal invariant violated)")]
    NoFreeColor(usize),
    #[error("graph is not weakly chordal: contraction stalled without a two-pair")]
    NotWeaklyChordal,
    #[error("no boat structure: {0}")]
    NotABoat(String),
    #[error("boat partition is not special: part {0} is not a clique")]
    NotSpecial(String),
    #[error("graph is not b-perfect: contains F{index}")]
    NotBPerfect { index: usize, embedding: Embedding },
    #[error("structure violation: {0}")]
    StructureViolation(String),
}
