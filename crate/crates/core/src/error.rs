use thiserror::Error;

use crate::pattern::PatternKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} vertices requested; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("edge {edge:?} has a vertex outside 0..{n}")]
    VertexOutOfRange { edge: [usize; 3], n: usize },
    #[error("edge {0:?} repeats a vertex")]
    DegenerateEdge([usize; 3]),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge([usize; 3]),
    #[error("relabeling is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("parts do not partition 0..{0}")]
    InvalidPartitionParts(usize),
    #[error("complete k-partite construction needs k >= 3 and k <= n <= 64 (got n = {n}, k = {k})")]
    InvalidConstruction { n: usize, k: usize },
    #[error("closed-form value requires n >= 6 (got n = {0})")]
    BelowTheoremRange(usize),
    #[error("no closed-form value is known for {0}")]
    NoClosedForm(PatternKind),
    #[error("{what} must lie in {min}..={max} (got {value})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error(
        "{pattern}-free host on {n} vertices reached minimum positive co-degree {found}, above the proven maximum {bound}"
    )]
    TheoremFalsified {
        n: usize,
        pattern: PatternKind,
        found: usize,
        bound: usize,
    },
}
