use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} size {size} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("set partitions are over different ground sets")]
    GroundSetMismatch,

    #[error("set partition does not refine the other")]
    NotARefinement,

    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    #[error("poset is not (3+1)-free: {0:?} induce a (3+1)")]
    NotThreePlusOneFree(Vec<String>),

    #[error("poset contains an induced N on {0:?}")]
    ContainsN(Vec<String>),

    #[error("insertion invariant broken: {0}")]
    InsertionInvariant(String),

    #[error("expected a {expected} polynomial, got {got}")]
    WrongBasis { expected: &'static str, got: String },
}
