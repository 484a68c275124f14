use std::io;

use thiserror::Error;

use crate::prng::GeneratorKind;

#[derive(Debug, Error)]
pub enum Error {
    #[error("seed expands to the all-zero state, a fixed point of {0}")]
    AllZeroState(GeneratorKind),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("value outside the domain: {0}")]
    Domain(String),

    #[error("bit source exhausted after {consumed} words")]
    InsufficientStream { consumed: u64 },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("unknown lane `{0}`")]
    UnknownLane(String),

    #[error("unknown test `{0}`")]
    UnknownTest(String),

    #[error("config: {0}")]
    Config(String),

    #[error("malformed record: {0}")]
    Record(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
