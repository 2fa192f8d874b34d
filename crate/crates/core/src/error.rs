use thiserror::Error;

/// Errors surfaced by parsing, verification and the guarded brute-force oracles.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("vertex index {index} out of range (graph has {n} vertices)")]
    OutOfRange { index: usize, n: usize },
    #[error("loops are not allowed in a simple graph (saw {0} {0})")]
    LoopInSimpleGraph(usize),
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("brute-force guard exceeded: {0}")]
    GuardExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
