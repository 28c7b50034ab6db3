use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incomparable weights: |{0}| != |{1}|")]
    IncomparableWeights(Partition, Partition),

    #[error("partition {0} needs at least two parts")]
    TooFewParts(Partition),

    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at specialization")]
    PoleAtSpecialization,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("malformed partition {0:?}")]
    MalformedPartition(String),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("T undefined on empty product")]
    EmptyPartition,

    #[error("Newton hypothesis fails at n = {0}")]
    HypothesisFails(usize),

    #[error("eigenvalue collision between {0} and {1}; solve at generic parameters and specialize")]
    EigenvalueCollision(Partition, Partition),

    #[error("degenerate Gram matrix at {0}")]
    DegenerateGram(Partition),

    #[error("operator requires a homogeneous argument")]
    NotHomogeneous,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
