use thiserror::Error;

/// Errors reported by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid vertex map: {0}")]
    InvalidMap(String),

    #[error("{what} has size {size}, which exceeds the bound {bound}")]
    SizeBound {
        what: &'static str,
        size: u128,
        bound: u128,
    },

    #[error("digraph is not a tournament")]
    NotATournament,

    #[error("digraph is not strongly connected")]
    NotStronglyConnected,

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("inconsistent identification: {0}")]
    InconsistentGlue(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("search did not resolve: {0}")]
    Unresolved(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
