//! Crate-wide error type.

use crate::comparability::OddCycleCertificate;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("inputs do not share the same label set")]
    LabelMismatch,

    #[error("empty input list")]
    EmptyList,

    #[error("empty structure")]
    EmptyInput,

    #[error("multiplication count for `{label}` must be at least 1, got {count}")]
    InvalidCount { label: String, count: usize },

    #[error("multiplied copy name `{0}` collides with an existing label")]
    LabelCollision(String),

    #[error("relation is cyclic: {}", cycle.join(" < "))]
    CycleDetected { cycle: Vec<String> },

    #[error("graph is not a comparability graph")]
    NotComparability { certificate: OddCycleCertificate },

    #[error("orientation is not transitive")]
    NotTransitive,

    #[error("graph {0} of the sequence is not an induced subgraph of its successor")]
    NotNested(usize),

    #[error("graph is a comparability graph; no obstruction certificate exists")]
    IsComparability,

    #[error("enumeration exceeded cap of {cap} (found {found} so far)")]
    CapExceeded { cap: usize, found: usize },

    #[error("no realizer of size at most {budget} found; dimension is in {lower}..={upper}")]
    BudgetExceeded {
        budget: usize,
        lower: usize,
        upper: usize,
    },

    #[error("poset dimension is at least {dim}, above the limit {limit} for this representation")]
    DimensionTooHigh { dim: usize, limit: usize },

    #[error("box dimension must be at least 1")]
    InvalidD,

    #[error("malformed box: {0}")]
    MalformedBox(String),

    #[error("representation does not cover vertex `{0}`")]
    MissingVertex(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
