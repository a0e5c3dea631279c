use thiserror::Error;

use crate::partition::{Node, Partition};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: entry {index} ({reason})")]
    NotAPartition { index: usize, reason: String },

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("characteristic must be at least 2, got {0}")]
    InvalidCharacteristic(usize),

    #[error("characteristic {0} is not prime; the Gram oracle needs a prime field")]
    NotPrime(usize),

    #[error("classification is only implemented for p in {{2, 3}}, got {0}")]
    UnsupportedCharacteristic(usize),

    #[error("partition {partition} is not {p}-regular")]
    IrregularInput { partition: Partition, p: usize },

    #[error("result {partition} is not {p}-regular")]
    IrregularResult { partition: Partition, p: usize },

    #[error("size mismatch: {left} has size {left_size}, {right} has size {right_size}")]
    SizeMismatch {
        left: Partition,
        left_size: usize,
        right: Partition,
        right_size: usize,
    },

    #[error("{partition} has only {available} normal {residue}-nodes, {requested} requested")]
    NotEnoughNormalNodes {
        partition: Partition,
        residue: usize,
        available: usize,
        requested: usize,
    },

    #[error("{partition} has only {available} conormal {residue}-nodes, {requested} requested")]
    NotEnoughConormalNodes {
        partition: Partition,
        residue: usize,
        available: usize,
        requested: usize,
    },

    #[error("node {node} is not a normal node of {partition}")]
    NotNormal { partition: Partition, node: Node },

    #[error("two-row restriction rule needs t >= 1; {partition} has t = 0 at p = {p}")]
    OutsideRuleDomain { partition: Partition, p: usize },

    #[error("the empty partition has no p-rim")]
    EmptyPartition,

    #[error("no {p}-regular partition has Mullineux symbol {symbol}")]
    NoSuchPartition { symbol: String, p: usize },

    #[error("label `{label}` is inconsistent with splitting: {reason}")]
    VariantInconsistent { label: String, reason: String },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("|{partition}| = {size} exceeds the oracle cap {cap}")]
    TooLarge {
        partition: Partition,
        size: usize,
        cap: usize,
    },

    #[error("split label {partition} has odd Gram rank {rank} at p = {p}")]
    OddDimension {
        partition: Partition,
        p: usize,
        rank: usize,
    },

    #[error("internal defect: {0}")]
    Internal(String),
}

impl Error {
    /// Whether the error rejects the caller's input rather than signalling a
    /// failed computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NotAPartition { .. }
                | Error::Parse { .. }
                | Error::InvalidCharacteristic(_)
                | Error::NotPrime(_)
                | Error::UnsupportedCharacteristic(_)
                | Error::IrregularInput { .. }
                | Error::SizeMismatch { .. }
                | Error::EmptyPartition
                | Error::VariantInconsistent { .. }
                | Error::PreconditionViolated(_)
                | Error::OutsideRuleDomain { .. }
                | Error::OutOfRange(_)
                | Error::TooLarge { .. }
        )
    }
}

pub(crate) fn check_characteristic(p: usize) -> Result<()> {
    if p < 2 {
        Err(Error::InvalidCharacteristic(p))
    } else {
        Ok(())
    }
}
