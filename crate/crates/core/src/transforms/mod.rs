//! Equivalence-preserving (and equivalence-probing) grammar and tree
//! transformations: expansions built from concatenated generations, edits,
//! constituent pruning, bounded reduction to a minimal grammar, and the
//! four derivation-tree operations.

mod edit;
mod expansion;
mod prune;
mod reduce;
mod tree_ops;

pub use edit::{edit_grammar, GrammarEdit};
pub use expansion::{
    expand_generations, preservation_report, Expansion, ExpansionSpec, PreservationReport,
};
pub use prune::prune_rule;
pub use reduce::{
    reduce_to_minimal, replay_reduction, ReductionOutcome, ReductionProof, ReductionStep,
    ReductionTarget,
};
pub use tree_ops::{tree_transform, TreeOp};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("generation index {index} out of range: {reason}")]
    IndexOutOfRange { index: usize, reason: String },
    #[error("`{symbol}` is not a constant (it rewrites); only stumps and erasing symbols can be removed")]
    NotAStump { symbol: String },
    #[error("invalid span {start}..{end} for a body of length {len}")]
    InvalidSpan {
        start: usize,
        end: usize,
        len: usize,
    },
    #[error("`{symbol}` has no production")]
    NoSuchRule { symbol: String },
    #[error("`{symbol}` is already in the alphabet; added constants must be fresh")]
    NotFresh { symbol: String },
    #[error("permutation is not a bijection on the alphabet: {reason}")]
    NotABijection { reason: String },
    #[error("chunk `{chunk}` is not a Fibonacci constituent{detail}")]
    NotConstituent { chunk: String, detail: String },
    #[error("chunk `{chunk}` does not occur in the body of `{rule}` at position {position}")]
    NotPresent {
        chunk: String,
        rule: String,
        position: usize,
    },
    #[error("selector {path:?} resolves to no node")]
    InvalidSelector { path: Vec<usize> },
    #[error("the sister denotes the empty string; (0, ~) does not collapse")]
    EmptySister,
    #[error("operation does not apply here: {0}")]
    NotApplicable(String),
}
