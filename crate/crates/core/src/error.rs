use thiserror::Error;

use crate::Element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RmqError {
    #[error("input sequence is empty")]
    EmptyInput,

    #[error("invalid range [{i}, {j}] for sequence of length {len}")]
    Range { i: usize, j: usize, len: usize },

    #[error("index {index} out of bounds for sequence of length {len}")]
    Index { index: usize, len: usize },

    #[error("length {0} is not of the form 2^(2^k)")]
    NotPowerTower(usize),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("value {value} at index {index} lies outside the universe [-{bound}, {bound})")]
    OutOfUniverse {
        index: usize,
        value: Element,
        bound: u64,
    },

    #[error(
        "value at index {index} equals the padding sentinel {sentinel}; raise the universe bound"
    )]
    SentinelCollision { index: usize, sentinel: Element },
}
