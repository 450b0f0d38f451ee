use thiserror::Error;

use crate::node::Node;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("component {component} is not a partition: {parts:?}")]
    NotAPartition { component: usize, parts: Vec<usize> },
    #[error("component {0} contains a zero part")]
    ZeroPart(usize),
    #[error("quantum characteristic must be 0 or at least 2, got {0}")]
    InvalidQuantumCharacteristic(u32),
    #[error("multicharge must have at least one entry")]
    EmptyMulticharge,
    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("node {0} is neither addable nor removable")]
    NotAddableOrRemovable(Node),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}
