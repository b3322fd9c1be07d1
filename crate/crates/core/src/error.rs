use thiserror::Error;

use crate::coxeter::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type {family}{rank} is not a finite crystallographic type in scope")]
    InvalidRank { family: Family, rank: usize },

    #[error("malformed Cartan data: {0}")]
    MalformedCartan(String),

    #[error("malformed Coxeter word: {0}")]
    InvalidCoxeterWord(String),

    #[error("invalid position set: {0}")]
    InvalidPositions(String),

    #[error("positions {0:?} do not form a c-cluster")]
    NotACluster(Vec<usize>),

    #[error("{0:?} is not an almost positive root")]
    NotAlmostPositive(Vec<i64>),

    #[error("exchange graph exceeds the budget of {limit} seeds")]
    BudgetExceeded { limit: usize },

    #[error("mutation index {index} out of range for rank {rank}")]
    BadVertex { index: usize, rank: usize },

    #[error("unknown cluster variable")]
    UnknownVariable,

    #[error("geometric model not available: {0}")]
    Geometry(String),

    /// A mathematical invariant that must hold for valid input failed.
    /// This always indicates a bug (or a wrong sign convention).
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub(crate) fn invariant<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invariant(msg.into()))
}
